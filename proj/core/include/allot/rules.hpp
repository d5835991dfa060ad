#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "allot/claims.hpp"
#include "allot/economy.hpp"

namespace allot {

enum class RuleDomain {
  kSinglePeaked,
  kSinglePlateaued,
  kWithEndowments,
};

/// Membership in a family whose option sets are known in closed form.
enum class SimpleFamily {
  kNone,
  kEqualDivision,  ///< satiates simple agents, others between omega/n and peak
  kEndowments,     ///< the same with individual endowments as reference
};

/// A deterministic allotment rule. Rules see full preferences, not just
/// peaks; own-peak-onliness is a checked property.
class Rule {
 public:
  using Fn = std::function<std::vector<Rat>(const Economy&)>;

  Rule(std::string name, RuleDomain domain, Fn fn, SimpleFamily family = SimpleFamily::kNone,
       std::size_t min_agents = 2);

  const std::string& name() const noexcept { return name_; }
  RuleDomain domain() const noexcept { return domain_; }
  SimpleFamily family() const noexcept { return family_; }
  std::size_t min_agents() const noexcept { return min_agents_; }

  /// Whether the economy lies in the rule's declared domain.
  bool accepts(const Economy& econ) const;

  /// Allocates; throws DomainError outside the domain and when the
  /// underlying function produces an infeasible vector.
  Allotment operator()(const Economy& econ) const;

 private:
  std::string name_;
  RuleDomain domain_;
  Fn fn_;
  SimpleFamily family_;
  std::size_t min_agents_;
};

// Classical rules.
Allotment uniform(const Economy& econ);
Allotment ced(const Economy& econ);
Allotment proportional(const Economy& econ);

Rule uniform_rule();
Rule ced_rule();
Rule proportional_rule();

/// Simple rule: plus agents get their peak, minus agents get omega/n adjusted
/// by the claims rule's awards toward their peak.
Allotment simple_allot(const Economy& econ, const ClaimsRule& claims_rule);
Rule simple_rule(ClaimsRule claims_rule);

/// The same construction with individual endowments as reference points.
Allotment simple_reallocation_allot(const Economy& econ, const ClaimsRule& claims_rule);
Rule simple_reallocation_rule(ClaimsRule claims_rule);

// Sequential adjustment construction of a simple rule.

/// Raised if an adjustment step ever has lower bound above upper bound.
class BoundsViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SelectorContext {
  Rat lo;
  Rat hi;
  Rat claim;             ///< |p - omega/n| of the agent being adjusted
  Rat remaining;         ///< |amount still to hand out|
  Rat remaining_claims;  ///< claims of this and all later agents
};

struct LambdaSelector {
  std::string name;
  std::function<Rat(const SelectorContext&)> choose;
};

LambdaSelector lowest_selector();
LambdaSelector highest_selector();
LambdaSelector midpoint_selector();
/// Share of what remains proportional to the agent's claim, clamped to the bounds.
LambdaSelector proportional_selector();
/// Looks a selector up by name: lo, hi, mid, prop.
LambdaSelector selector_by_name(std::string_view name);

enum class AgentOrder { kIndex, kReverseIndex, kPeakAscending, kPeakDescending };
AgentOrder order_by_name(std::string_view name);
std::string_view order_name(AgentOrder order);

/// Minus agents of the economy in the requested order.
std::vector<std::size_t> order_minus_agents(const Economy& econ, AgentOrder order);

struct AdjustmentStep {
  std::size_t agent = 0;
  Rat lo;
  Rat hi;
  Rat lambda;
};

struct SequentialAdjustment {
  Allotment allotment;
  std::vector<AdjustmentStep> steps;
};

/// Runs the initialization and sequential adjustment. `order` must be a
/// permutation of the minus agents.
SequentialAdjustment sequential_adjustment(const Economy& econ, std::span<const std::size_t> order,
                                           const LambdaSelector& selector);

Allotment appendix_b(const Economy& econ, std::span<const std::size_t> order, const LambdaSelector& selector);

Rule sequential_simple_rule(AgentOrder order = AgentOrder::kIndex, LambdaSelector selector = lowest_selector());

// Single-plateaued extension.

enum class PlateauCase {
  kLowerEnds,  ///< sum of plateau lows >= omega
  kUpperEnds,  ///< sum of plateau highs <= omega
  kInterior,
};

PlateauCase plateau_case(const Economy& econ);

/// Extends a single-peaked rule: applies it to the profile of plateau lows
/// or highs when those are on the correct side of omega, otherwise picks
/// clamp(level, lo_i, hi_i) with a common level.
Rule plateau_extension(Rule base);

// Rules that each drop exactly one axiom.

enum class GalleryRule { kEqualDivision, kStar, kBar, kHat, kUnderline };

GalleryRule gallery_by_name(std::string_view name);
std::string_view gallery_name(GalleryRule which);
Rule gallery_rule(GalleryRule which);

}  // namespace allot
