#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "allot/rational.hpp"

namespace allot {

/// Division of an endowment among claimants: claims c_i >= 0 and an
/// endowment 0 <= E <= sum c.
class ClaimsProblem {
 public:
  ClaimsProblem(std::vector<Rat> claims, Rat endowment);

  std::span<const Rat> claims() const noexcept { return claims_; }
  const Rat& endowment() const noexcept { return endowment_; }
  const Rat& total_claims() const noexcept { return total_; }
  std::size_t size() const noexcept { return claims_.size(); }

 private:
  std::vector<Rat> claims_;
  Rat endowment_;
  Rat total_;
};

using Awards = std::vector<Rat>;
using ClaimsRuleFn = std::function<Awards(const ClaimsProblem&)>;

struct ClaimsRule {
  std::string name;
  ClaimsRuleFn divide;

  Awards operator()(const ClaimsProblem& cp) const { return divide(cp); }
};

/// Constrained equal awards: min(c_i, level).
Awards cea(const ClaimsProblem& cp);
/// Constrained equal losses: max(0, c_i - level).
Awards cel(const ClaimsProblem& cp);
/// Awards proportional to claims; all zero when every claim is zero.
Awards pro(const ClaimsProblem& cp);

/// Smallest level solving sum min(c_i, level) = E.
Rat cea_level(const ClaimsProblem& cp);
/// Smallest level solving sum max(0, c_i - level) = E.
Rat cel_level(const ClaimsProblem& cp);

ClaimsRule cea_rule();
ClaimsRule cel_rule();
ClaimsRule pro_rule();

/// Throws DomainError unless 0 <= award_i <= claim_i and the awards exhaust E.
void validate_awards(const ClaimsProblem& cp, std::span<const Rat> awards);

struct ClaimsCounterexample {
  ClaimsProblem problem;
  std::size_t i = 0;
  std::size_t j = 0;
  Awards awards;
};

struct ClaimsRuleReport {
  bool symmetric = true;
  bool responsive = true;
  std::optional<ClaimsCounterexample> symmetry_witness;
  std::optional<ClaimsCounterexample> responsiveness_witness;
};

/// Checks equal-claims-equal-awards and claim monotonicity on the given
/// problems, keeping the first counterexample of each.
ClaimsRuleReport check_claims_rule_properties(const ClaimsRule& rule, std::span<const ClaimsProblem> problems);

}  // namespace allot
