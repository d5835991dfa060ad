#include "allot/rules.hpp"

#include <algorithm>
#include <numeric>

#include "allot/waterfill.hpp"

namespace allot {
namespace {

Rat sum_of(std::span<const Rat> xs) {
  Rat s = 0;
  for (const Rat& x : xs) s += x;
  return s;
}

std::vector<Rat> uniform_amounts(std::span<const Rat> peaks, const Rat& omega) {
  std::vector<Rat> out;
  out.reserve(peaks.size());
  if (sum_of(peaks) >= omega) {
    const Rat level = solve_capped_level(peaks, omega);
    for (const Rat& p : peaks) out.push_back(p < level ? p : level);
  } else {
    const Rat level = solve_floored_level(peaks, omega);
    for (const Rat& p : peaks) out.push_back(p > level ? p : level);
  }
  return out;
}

std::vector<Rat> simple_amounts(const Economy& econ, const SimplePartition& part, const ClaimsRule& claims_rule) {
  const ClaimsProblem cp = claims_of_minus(part, econ);
  const Awards nu = claims_rule(cp);
  validate_awards(cp, nu);

  std::vector<Rat> out(econ.size());
  for (std::size_t i : part.plus) out[i] = econ.pref(i).peak();
  for (std::size_t k = 0; k < part.minus.size(); ++k) {
    const std::size_t i = part.minus[k];
    out[i] = part.excess_demand() ? Rat(part.reference[i] + nu[k]) : Rat(part.reference[i] - nu[k]);
  }
  return out;
}

Preference with_peak(const Preference& pref, Rat peak) {
  return Preference::single_peaked(std::move(peak), pref.left_slope(), pref.right_slope());
}

}  // namespace

Rule::Rule(std::string name, RuleDomain domain, Fn fn, SimpleFamily family, std::size_t min_agents)
    : name_(std::move(name)), domain_(domain), fn_(std::move(fn)), family_(family), min_agents_(min_agents) {}

bool Rule::accepts(const Economy& econ) const {
  if (econ.size() < min_agents_ || econ.any_unbounded()) return false;
  switch (domain_) {
    case RuleDomain::kSinglePeaked:
      return econ.all_single_peaked();
    case RuleDomain::kSinglePlateaued:
      return true;
    case RuleDomain::kWithEndowments:
      return econ.all_single_peaked() && econ.has_endowments();
  }
  return false;
}

Allotment Rule::operator()(const Economy& econ) const {
  if (!accepts(econ)) {
    std::string why = "economy outside the domain of rule " + name_;
    if (econ.size() < min_agents_) why += " (needs at least " + std::to_string(min_agents_) + " agents)";
    if (domain_ == RuleDomain::kWithEndowments && !econ.has_endowments()) why += " (needs individual endowments)";
    if (econ.any_unbounded()) why += " (unbounded peaks are not allocatable)";
    throw DomainError(why);
  }
  return Allotment(fn_(econ), econ.omega());
}

Allotment uniform(const Economy& econ) { return Allotment(uniform_amounts(econ.peaks(), econ.omega()), econ.omega()); }

Allotment ced(const Economy& econ) {
  const std::vector<Rat> peaks = econ.peaks();
  const Rat total = sum_of(peaks);
  std::vector<Rat> out;
  out.reserve(peaks.size());
  if (total >= econ.omega()) {
    // sum max(p - d, 0) = omega  <=>  sum min(p, d) = total - omega
    const Rat d = solve_capped_level(peaks, total - econ.omega());
    for (const Rat& p : peaks) out.push_back(p > d ? Rat(p - d) : Rat(0));
  } else {
    const Rat d = (econ.omega() - total) / static_cast<unsigned long>(peaks.size());
    for (const Rat& p : peaks) out.push_back(p + d);
  }
  return Allotment(std::move(out), econ.omega());
}

Allotment proportional(const Economy& econ) {
  const std::vector<Rat> peaks = econ.peaks();
  const Rat total = sum_of(peaks);
  std::vector<Rat> out;
  out.reserve(peaks.size());
  for (const Rat& p : peaks) out.push_back(total > 0 ? Rat(p * econ.omega() / total) : econ.equal_share());
  return Allotment(std::move(out), econ.omega());
}

Rule uniform_rule() {
  return Rule("uniform", RuleDomain::kSinglePeaked,
              [](const Economy& e) { return uniform_amounts(e.peaks(), e.omega()); }, SimpleFamily::kEqualDivision);
}

Rule ced_rule() {
  return Rule("ced", RuleDomain::kSinglePeaked, [](const Economy& e) {
    const Allotment a = ced(e);
    return std::vector<Rat>(a.amounts().begin(), a.amounts().end());
  });
}

Rule proportional_rule() {
  return Rule("proportional", RuleDomain::kSinglePeaked, [](const Economy& e) {
    const Allotment a = proportional(e);
    return std::vector<Rat>(a.amounts().begin(), a.amounts().end());
  });
}

Allotment simple_allot(const Economy& econ, const ClaimsRule& claims_rule) {
  return Allotment(simple_amounts(econ, partition(econ), claims_rule), econ.omega());
}

Rule simple_rule(ClaimsRule claims_rule) {
  std::string name = "simple:" + claims_rule.name;
  return Rule(
      std::move(name), RuleDomain::kSinglePeaked,
      [cr = std::move(claims_rule)](const Economy& e) { return simple_amounts(e, partition(e), cr); },
      SimpleFamily::kEqualDivision);
}

Allotment simple_reallocation_allot(const Economy& econ, const ClaimsRule& claims_rule) {
  return Allotment(simple_amounts(econ, endowment_partition(econ), claims_rule), econ.omega());
}

Rule simple_reallocation_rule(ClaimsRule claims_rule) {
  std::string name = "realloc:" + claims_rule.name;
  return Rule(
      std::move(name), RuleDomain::kWithEndowments,
      [cr = std::move(claims_rule)](const Economy& e) { return simple_amounts(e, endowment_partition(e), cr); },
      SimpleFamily::kEndowments);
}

// ---------------------------------------------------------------------------
// Sequential adjustment

LambdaSelector lowest_selector() {
  return {"lo", [](const SelectorContext& c) { return c.lo; }};
}

LambdaSelector highest_selector() {
  return {"hi", [](const SelectorContext& c) { return c.hi; }};
}

LambdaSelector midpoint_selector() {
  return {"mid", [](const SelectorContext& c) { return Rat((c.lo + c.hi) / 2); }};
}

LambdaSelector proportional_selector() {
  return {"prop", [](const SelectorContext& c) {
            if (c.remaining_claims == 0) return c.lo;
            Rat share = c.remaining * c.claim / c.remaining_claims;
            if (share < c.lo) return c.lo;
            if (share > c.hi) return c.hi;
            return share;
          }};
}

LambdaSelector selector_by_name(std::string_view name) {
  if (name == "lo") return lowest_selector();
  if (name == "hi") return highest_selector();
  if (name == "mid") return midpoint_selector();
  if (name == "prop") return proportional_selector();
  throw DomainError("unknown selector \"" + std::string(name) + "\" (expected lo, hi, mid, prop)");
}

AgentOrder order_by_name(std::string_view name) {
  if (name == "index") return AgentOrder::kIndex;
  if (name == "reverse") return AgentOrder::kReverseIndex;
  if (name == "peak-asc") return AgentOrder::kPeakAscending;
  if (name == "peak-desc") return AgentOrder::kPeakDescending;
  throw DomainError("unknown order \"" + std::string(name) + "\" (expected index, reverse, peak-asc, peak-desc)");
}

std::string_view order_name(AgentOrder order) {
  switch (order) {
    case AgentOrder::kIndex:
      return "index";
    case AgentOrder::kReverseIndex:
      return "reverse";
    case AgentOrder::kPeakAscending:
      return "peak-asc";
    case AgentOrder::kPeakDescending:
      return "peak-desc";
  }
  return "index";
}

std::vector<std::size_t> order_minus_agents(const Economy& econ, AgentOrder order) {
  std::vector<std::size_t> minus = partition(econ).minus;
  switch (order) {
    case AgentOrder::kIndex:
      break;
    case AgentOrder::kReverseIndex:
      std::reverse(minus.begin(), minus.end());
      break;
    case AgentOrder::kPeakAscending:
      std::stable_sort(minus.begin(), minus.end(),
                       [&](std::size_t a, std::size_t b) { return econ.pref(a).peak() < econ.pref(b).peak(); });
      break;
    case AgentOrder::kPeakDescending:
      std::stable_sort(minus.begin(), minus.end(),
                       [&](std::size_t a, std::size_t b) { return econ.pref(a).peak() > econ.pref(b).peak(); });
      break;
  }
  return minus;
}

SequentialAdjustment sequential_adjustment(const Economy& econ, std::span<const std::size_t> order,
                                           const LambdaSelector& selector) {
  const SimplePartition part = partition(econ);
  {
    std::vector<std::size_t> a(order.begin(), order.end());
    std::vector<std::size_t> b = part.minus;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw DomainError("adjustment order must be a permutation of the non-simple agents");
  }
  if (order.empty()) throw DomainError("economy has no non-simple agent");

  const Rat& share = econ.equal_share();
  const std::vector<Rat> peaks = econ.peaks();

  std::vector<Rat> alpha(econ.size());
  for (std::size_t i : part.plus) alpha[i] = peaks[i];
  for (std::size_t i : part.minus) alpha[i] = share;

  Rat left_over = econ.omega() - sum_of(alpha);     // amount still left to allocate
  Rat slack = econ.omega() - sum_of(peaks);         // keeps the unadjusted agents on the right side

  Rat remaining_claims = 0;
  for (std::size_t i : order) remaining_claims += abs_diff(peaks[i], share);

  std::vector<AdjustmentStep> steps;
  const bool demand = part.excess_demand();
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    const std::size_t i = order[t];
    const Rat& p = peaks[i];
    AdjustmentStep step;
    step.agent = i;
    if (demand) {
      step.lo = std::max(Rat(0), Rat(slack + p - share));
      step.hi = std::min(Rat(p - share), left_over);
    } else {
      step.lo = std::max(Rat(0), Rat(share - p - slack));
      step.hi = std::min(Rat(share - p), Rat(-left_over));
    }
    if (step.lo > step.hi) {
      throw BoundsViolation("empty adjustment bounds [" + to_string(step.lo) + ", " + to_string(step.hi) +
                            "] for agent " + std::to_string(i));
    }
    const Rat claim = abs_diff(p, share);
    step.lambda = selector.choose(SelectorContext{step.lo, step.hi, claim, abs(left_over), remaining_claims});
    if (step.lambda < step.lo || step.lambda > step.hi) {
      throw DomainError("selector " + selector.name + " left the admissible bounds");
    }
    remaining_claims -= claim;

    if (demand) {
      alpha[i] += step.lambda;
      left_over -= step.lambda;
    } else {
      alpha[i] -= step.lambda;
      left_over += step.lambda;
    }
    slack = slack - alpha[i] + p;
    steps.push_back(std::move(step));
  }

  const std::size_t last = order.back();
  Rat others = 0;
  for (std::size_t j = 0; j < econ.size(); ++j) {
    if (j != last) others += alpha[j];
  }
  alpha[last] = econ.omega() - others;
  return SequentialAdjustment{Allotment(std::move(alpha), econ.omega()), std::move(steps)};
}

Allotment appendix_b(const Economy& econ, std::span<const std::size_t> order, const LambdaSelector& selector) {
  return sequential_adjustment(econ, order, selector).allotment;
}

Rule sequential_simple_rule(AgentOrder order, LambdaSelector selector) {
  std::string name = "simple:appendix-b[" + selector.name + "," + std::string(order_name(order)) + "]";
  return Rule(
      std::move(name), RuleDomain::kSinglePeaked,
      [order, sel = std::move(selector)](const Economy& e) {
        const std::vector<std::size_t> minus = order_minus_agents(e, order);
        const Allotment a = appendix_b(e, minus, sel);
        return std::vector<Rat>(a.amounts().begin(), a.amounts().end());
      },
      SimpleFamily::kEqualDivision);
}

// ---------------------------------------------------------------------------
// Single-plateaued extension

PlateauCase plateau_case(const Economy& econ) {
  Rat lows = -econ.omega();
  Rat highs = -econ.omega();
  for (const Preference& p : econ.prefs()) {
    lows += p.plateau_lo();
    highs += p.plateau_hi();
  }
  if (lows >= 0) return PlateauCase::kLowerEnds;
  if (highs <= 0) return PlateauCase::kUpperEnds;
  return PlateauCase::kInterior;
}

Rule plateau_extension(Rule base) {
  if (base.domain() != RuleDomain::kSinglePeaked) throw DomainError("only single-peaked rules can be extended");
  std::string name = "spl:" + (base.name().starts_with("simple:") ? base.name().substr(7) : base.name());
  return Rule(std::move(name), RuleDomain::kSinglePlateaued, [base = std::move(base)](const Economy& e) {
    const PlateauCase which = plateau_case(e);
    if (which == PlateauCase::kInterior) {
      std::vector<ClampTerm> terms;
      terms.reserve(e.size());
      for (const Preference& p : e.prefs()) terms.push_back({p.plateau_lo(), p.plateau_hi()});
      const Rat level = solve_clamp_level(terms, e.omega());
      std::vector<Rat> out;
      out.reserve(e.size());
      for (const ClampTerm& t : terms) out.push_back(level < t.lo ? t.lo : (level > *t.hi ? *t.hi : level));
      return out;
    }
    std::vector<Preference> ends;
    ends.reserve(e.size());
    for (const Preference& p : e.prefs()) {
      ends.push_back(with_peak(p, which == PlateauCase::kLowerEnds ? p.plateau_lo() : p.plateau_hi()));
    }
    const Allotment a = base(Economy(std::move(ends), e.omega()));
    return std::vector<Rat>(a.amounts().begin(), a.amounts().end());
  });
}

// ---------------------------------------------------------------------------
// Gallery

GalleryRule gallery_by_name(std::string_view name) {
  if (name == "equal_division") return GalleryRule::kEqualDivision;
  if (name == "star") return GalleryRule::kStar;
  if (name == "bar") return GalleryRule::kBar;
  if (name == "hat") return GalleryRule::kHat;
  if (name == "underline") return GalleryRule::kUnderline;
  throw DomainError("unknown gallery rule \"" + std::string(name) +
                    "\" (expected equal_division, star, bar, hat, underline)");
}

std::string_view gallery_name(GalleryRule which) {
  switch (which) {
    case GalleryRule::kEqualDivision:
      return "equal_division";
    case GalleryRule::kStar:
      return "star";
    case GalleryRule::kBar:
      return "bar";
    case GalleryRule::kHat:
      return "hat";
    case GalleryRule::kUnderline:
      return "underline";
  }
  return "equal_division";
}

namespace {

std::vector<Rat> equal_division_amounts(const Economy& e) { return std::vector<Rat>(e.size(), e.equal_share()); }

std::vector<Rat> star_amounts(const Economy& e) {
  const std::vector<Rat> p = e.peaks();
  bool special = p[0] + p[1] == e.omega();
  for (std::size_t j = 2; special && j < p.size(); ++j) special = p[j] != p[0] && p[j] != p[1];
  if (!special) return uniform_amounts(p, e.omega());
  std::vector<Rat> out(p.size(), Rat(0));
  out[0] = p[0];
  out[1] = p[1];
  return out;
}

std::vector<Rat> bar_amounts(const Economy& e) {
  const std::vector<Rat> p = e.peaks();
  bool special = p[0] == e.omega() && p[1] == e.omega();
  for (std::size_t j = 2; special && j < p.size(); ++j) special = p[j] == 0;
  if (!special) return uniform_amounts(p, e.omega());
  std::vector<Rat> out(p.size(), Rat(0));
  out[0] = e.omega() / 3;
  out[1] = 2 * e.omega() / 3;
  return out;
}

std::vector<Rat> hat_amounts(const Economy& e) {
  const std::vector<Rat> p = e.peaks();
  if (excess(e) >= 0) return uniform_amounts(p, e.omega());
  const Rat lowest = *std::min_element(p.begin(), p.end());
  Rat others = 0;
  unsigned long lowest_count = 0;
  for (const Rat& x : p) {
    if (x == lowest) {
      ++lowest_count;
    } else {
      others += x;
    }
  }
  const Rat level = (e.omega() - others) / lowest_count;
  std::vector<Rat> out;
  out.reserve(p.size());
  for (const Rat& x : p) out.push_back(x == lowest ? level : x);
  return out;
}

std::vector<Rat> underline_amounts(const Economy& e) {
  std::vector<Rat> p = e.peaks();
  Rat others = -e.omega();
  bool strictly_lowest = true;
  for (std::size_t j = 1; j < p.size(); ++j) {
    others += p[j];
    strictly_lowest = strictly_lowest && p[0] < p[j];
  }
  const bool special = others >= 0 && e.pref(0).strictly_prefers(0, e.equal_share()) && strictly_lowest;
  if (special) p[0] = 0;
  return uniform_amounts(p, e.omega());
}

}  // namespace

Rule gallery_rule(GalleryRule which) {
  std::string name = "gallery:" + std::string(gallery_name(which));
  switch (which) {
    case GalleryRule::kEqualDivision:
      return Rule(std::move(name), RuleDomain::kSinglePeaked, equal_division_amounts);
    case GalleryRule::kStar:
      return Rule(std::move(name), RuleDomain::kSinglePeaked, star_amounts, SimpleFamily::kNone, 3);
    case GalleryRule::kBar:
      return Rule(std::move(name), RuleDomain::kSinglePeaked, bar_amounts, SimpleFamily::kNone, 3);
    case GalleryRule::kHat:
      return Rule(std::move(name), RuleDomain::kSinglePeaked, hat_amounts);
    case GalleryRule::kUnderline:
      return Rule(std::move(name), RuleDomain::kSinglePeaked, underline_amounts);
  }
  throw DomainError("unknown gallery rule");
}

}  // namespace allot
