#include "allot/claims.hpp"

#include <algorithm>

#include "allot/waterfill.hpp"

namespace allot {

ClaimsProblem::ClaimsProblem(std::vector<Rat> claims, Rat endowment)
    : claims_(std::move(claims)), endowment_(std::move(endowment)), total_(0) {
  for (const Rat& c : claims_) {
    if (c < 0) throw DomainError("negative claim " + to_string(c));
    total_ += c;
  }
  if (endowment_ < 0) throw DomainError("negative endowment " + to_string(endowment_));
  if (endowment_ > total_) {
    throw DomainError("endowment " + to_string(endowment_) + " exceeds total claims " + to_string(total_));
  }
}

Rat cea_level(const ClaimsProblem& cp) { return solve_capped_level(cp.claims(), cp.endowment()); }

Rat cel_level(const ClaimsProblem& cp) {
  // sum max(0, c - l) = sum c - sum min(c, l), so this is CEA on the losses.
  return solve_capped_level(cp.claims(), cp.total_claims() - cp.endowment());
}

Awards cea(const ClaimsProblem& cp) {
  const Rat level = cea_level(cp);
  Awards out;
  out.reserve(cp.size());
  for (const Rat& c : cp.claims()) out.push_back(c < level ? c : level);
  return out;
}

Awards cel(const ClaimsProblem& cp) {
  const Rat level = cel_level(cp);
  Awards out;
  out.reserve(cp.size());
  for (const Rat& c : cp.claims()) out.push_back(c > level ? Rat(c - level) : Rat(0));
  return out;
}

Awards pro(const ClaimsProblem& cp) {
  Awards out;
  out.reserve(cp.size());
  for (const Rat& c : cp.claims()) {
    out.push_back(cp.total_claims() == 0 ? Rat(0) : Rat(c * cp.endowment() / cp.total_claims()));
  }
  return out;
}

ClaimsRule cea_rule() { return {"cea", &cea}; }
ClaimsRule cel_rule() { return {"cel", &cel}; }
ClaimsRule pro_rule() { return {"pro", &pro}; }

void validate_awards(const ClaimsProblem& cp, std::span<const Rat> awards) {
  if (awards.size() != cp.size()) throw DomainError("awards vector has the wrong length");
  Rat sum = 0;
  for (std::size_t i = 0; i < awards.size(); ++i) {
    if (awards[i] < 0 || awards[i] > cp.claims()[i]) {
      throw DomainError("award " + to_string(awards[i]) + " outside [0, " + to_string(cp.claims()[i]) + "]");
    }
    sum += awards[i];
  }
  if (sum != cp.endowment()) {
    throw DomainError("awards sum to " + to_string(sum) + ", endowment is " + to_string(cp.endowment()));
  }
}

ClaimsRuleReport check_claims_rule_properties(const ClaimsRule& rule, std::span<const ClaimsProblem> problems) {
  ClaimsRuleReport report;
  for (const ClaimsProblem& cp : problems) {
    if (!report.symmetric && !report.responsive) break;
    const Awards awards = rule(cp);
    validate_awards(cp, awards);
    const auto claims = cp.claims();
    for (std::size_t i = 0; i < cp.size(); ++i) {
      for (std::size_t j = 0; j < cp.size(); ++j) {
        if (i == j) continue;
        if (report.symmetric && claims[i] == claims[j] && awards[i] != awards[j]) {
          report.symmetric = false;
          report.symmetry_witness = ClaimsCounterexample{cp, i, j, awards};
        }
        if (report.responsive && claims[i] <= claims[j] && awards[i] > awards[j]) {
          report.responsive = false;
          report.responsiveness_witness = ClaimsCounterexample{cp, i, j, awards};
        }
      }
    }
  }
  return report;
}

}  // namespace allot
