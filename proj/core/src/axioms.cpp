#include "allot/axioms.hpp"

#include <functional>

namespace allot {
namespace {

using Probe = std::function<std::optional<Witness>(const Rule&, const Economy&)>;

AxiomReport run_probe(Axiom axiom, const Rule& rule, std::span<const Economy> econs, const Probe& probe) {
  AxiomReport report;
  report.axiom = axiom;
  report.rule = rule.name();
  for (const Economy& e : econs) {
    if (!rule.accepts(e)) continue;
    ++report.economies_checked;
    if (auto w = probe(rule, e)) {
      report.verdict = Verdict::kFail;
      report.witness = std::move(w);
      break;
    }
  }
  return report;
}

std::string agent_label(std::size_t i) { return "agent " + std::to_string(i + 1); }

bool is_between(const Rat& x, const Rat& a, const Rat& b) { return a <= b ? (a <= x && x <= b) : (b <= x && x <= a); }

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kEfficiency:
      return "efficiency";
    case Axiom::kOwnPeakOnly:
      return "own-peak-only";
    case Axiom::kSymmetry:
      return "symmetry";
    case Axiom::kEqualDivisionGuarantee:
      return "edg";
    case Axiom::kEndowmentsGuarantee:
      return "endowments-guarantee";
    case Axiom::kPeakResponsive:
      return "peak-responsive";
    case Axiom::kEnvyFree:
      return "envy-free";
    case Axiom::kEqualDivisionLowerBound:
      return "edlb";
    case Axiom::kBetweenness:
      return "betweenness";
    case Axiom::kStrategyProof:
      return "sp";
    case Axiom::kNom:
      return "nom";
  }
  return "?";
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms{
      Axiom::kEfficiency,     Axiom::kOwnPeakOnly, Axiom::kSymmetry,
      Axiom::kEqualDivisionGuarantee, Axiom::kEndowmentsGuarantee, Axiom::kPeakResponsive,
      Axiom::kEnvyFree,       Axiom::kEqualDivisionLowerBound, Axiom::kBetweenness,
      Axiom::kStrategyProof,  Axiom::kNom};
  return axioms;
}

Axiom axiom_by_name(std::string_view name) {
  for (Axiom a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  throw DomainError("unknown axiom \"" + std::string(name) + "\"");
}

std::string_view verdict_name(Verdict v) { return v == Verdict::kFail ? "FAIL" : "PASS_ON_SAMPLE"; }

std::vector<Preference> misreport_candidates(const Preference& truth, const Rat& omega, const MisreportGrid& grid) {
  if (grid.step <= 0) throw DomainError("misreport grid step must be positive");
  std::vector<SlopePair> slopes{{Rat(1), Rat(1)}};
  if (grid.all_slopes) slopes = slope_catalogue();
  std::vector<Preference> out;
  const Rat top = omega * grid.range;
  const Rat step = grid.step * omega;
  for (Rat q = 0; q <= top; q += step) {
    for (const auto& [a, b] : slopes) {
      Preference p = Preference::single_peaked(q, a, b);
      if (p != truth) out.push_back(std::move(p));
    }
  }
  return out;
}

std::optional<Witness> same_sided_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  const Rat z = excess(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    const Rat& p = econ.pref(i).peak();
    if (z >= 0 && x[i] > p) {
      return Witness{econ, {i}, agent_label(i) + " gets " + to_string(x[i]) + " above peak " + to_string(p) +
                                    " under excess demand z=" + to_string(z)};
    }
    if (z <= 0 && x[i] < p) {
      return Witness{econ, {i}, agent_label(i) + " gets " + to_string(x[i]) + " below peak " + to_string(p) +
                                    " under excess supply z=" + to_string(z)};
    }
  }
  return std::nullopt;
}

std::optional<Witness> own_peak_only_violation(const Rule& rule, const Economy& econ, std::span<const SlopePair> slopes) {
  const Allotment x = rule(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    for (const auto& [a, b] : slopes) {
      const Preference alt = econ.pref(i).with_slopes(a, b);
      if (alt == econ.pref(i)) continue;
      Economy variant = econ.with_pref(i, alt);
      const Allotment y = rule(variant);
      if (y[i] != x[i]) {
        return Witness{econ, {i},
                       agent_label(i) + " gets " + to_string(x[i]) + " but " + to_string(y[i]) +
                           " after changing slopes to (" + to_string(a) + "," + to_string(b) + ") with the same peak",
                       std::move(variant)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> symmetry_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    for (std::size_t j = i + 1; j < econ.size(); ++j) {
      if (econ.pref(i) == econ.pref(j) && !econ.pref(i).indifferent(x[i], x[j])) {
        return Witness{econ, {i, j},
                       agent_label(i) + " and " + agent_label(j) + " have identical preferences but get " +
                           to_string(x[i]) + " and " + to_string(x[j])};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> edg_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  const Rat& share = econ.equal_share();
  for (std::size_t i = 0; i < econ.size(); ++i) {
    if (econ.pref(i).is_ideal(share) && !econ.pref(i).indifferent(x[i], share)) {
      return Witness{econ, {i}, agent_label(i) + " has peak omega/n=" + to_string(share) + " but gets " + to_string(x[i])};
    }
  }
  return std::nullopt;
}

std::optional<Witness> endowments_guarantee_violation(const Rule& rule, const Economy& econ) {
  if (!econ.has_endowments()) return std::nullopt;
  const Allotment x = rule(econ);
  const auto w = econ.endowments();
  for (std::size_t i = 0; i < econ.size(); ++i) {
    if (econ.pref(i).is_ideal(w[i]) && !econ.pref(i).indifferent(x[i], w[i])) {
      return Witness{econ, {i}, agent_label(i) + " has peak at its endowment " + to_string(w[i]) + " but gets " +
                                    to_string(x[i])};
    }
  }
  return std::nullopt;
}

std::optional<Witness> peak_responsive_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    for (std::size_t j = 0; j < econ.size(); ++j) {
      if (i == j) continue;
      if (econ.pref(i).peak() <= econ.pref(j).peak() && x[i] > x[j]) {
        return Witness{econ, {i, j},
                       agent_label(i) + " has peak " + to_string(econ.pref(i).peak()) + " <= " +
                           to_string(econ.pref(j).peak()) + " of " + agent_label(j) + " but gets " + to_string(x[i]) +
                           " > " + to_string(x[j])};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> envy_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    for (std::size_t j = 0; j < econ.size(); ++j) {
      if (i != j && econ.pref(i).strictly_prefers(x[j], x[i])) {
        return Witness{econ, {i, j},
                       agent_label(i) + " envies " + agent_label(j) + ": d(" + to_string(x[i]) +
                           ")=" + to_string(econ.pref(i).disutility(x[i])) + " > d(" + to_string(x[j]) +
                           ")=" + to_string(econ.pref(i).disutility(x[j]))};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> edlb_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  const Rat& share = econ.equal_share();
  for (std::size_t i = 0; i < econ.size(); ++i) {
    if (econ.pref(i).strictly_prefers(share, x[i])) {
      return Witness{econ, {i},
                     agent_label(i) + " prefers omega/n: d(" + to_string(x[i]) + ")=" +
                         to_string(econ.pref(i).disutility(x[i])) + " > d(" + to_string(share) +
                         ")=" + to_string(econ.pref(i).disutility(share))};
    }
  }
  return std::nullopt;
}

std::optional<Witness> betweenness_violation(const Rule& rule, const Economy& econ) {
  const Allotment x = rule(econ);
  const SimplePartition part =
      rule.family() == SimpleFamily::kEndowments ? endowment_partition(econ) : partition(econ);
  for (std::size_t i : part.plus) {
    if (x[i] != econ.pref(i).peak()) {
      return Witness{econ, {i}, agent_label(i) + " is simple but gets " + to_string(x[i]) + " instead of its peak " +
                                    to_string(econ.pref(i).peak())};
    }
  }
  for (std::size_t i : part.minus) {
    if (!is_between(x[i], part.reference[i], econ.pref(i).peak())) {
      return Witness{econ, {i},
                     agent_label(i) + " is non-simple and gets " + to_string(x[i]) + ", not between " +
                         to_string(part.reference[i]) + " and its peak " + to_string(econ.pref(i).peak())};
    }
  }
  return std::nullopt;
}

std::optional<Witness> manipulation_at(const Rule& rule, const Economy& econ, const MisreportGrid& grid) {
  const Allotment x = rule(econ);
  for (std::size_t i = 0; i < econ.size(); ++i) {
    for (Preference& lie : misreport_candidates(econ.pref(i), econ.omega(), grid)) {
      Economy variant = econ.with_pref(i, std::move(lie));
      const Allotment y = rule(variant);
      if (econ.pref(i).strictly_prefers(y[i], x[i])) {
        return Witness{econ, {i},
                       agent_label(i) + " gets " + to_string(y[i]) + " instead of " + to_string(x[i]) +
                           " by reporting " + describe(variant.pref(i)),
                       std::move(variant)};
      }
    }
  }
  return std::nullopt;
}

AxiomReport check_same_sided(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kEfficiency, rule, econs, same_sided_violation);
}

AxiomReport check_own_peak_only(const Rule& rule, std::span<const Economy> econs, std::span<const SlopePair> slopes) {
  return run_probe(Axiom::kOwnPeakOnly, rule, econs,
                   [slopes](const Rule& r, const Economy& e) { return own_peak_only_violation(r, e, slopes); });
}

AxiomReport check_symmetry(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kSymmetry, rule, econs, symmetry_violation);
}

AxiomReport check_edg(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kEqualDivisionGuarantee, rule, econs, edg_violation);
}

AxiomReport check_endowments_guarantee(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kEndowmentsGuarantee, rule, econs, endowments_guarantee_violation);
}

AxiomReport check_peak_responsive(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kPeakResponsive, rule, econs, peak_responsive_violation);
}

AxiomReport check_envy_free(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kEnvyFree, rule, econs, envy_violation);
}

AxiomReport check_edlb(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kEqualDivisionLowerBound, rule, econs, edlb_violation);
}

AxiomReport check_betweenness(const Rule& rule, std::span<const Economy> econs) {
  return run_probe(Axiom::kBetweenness, rule, econs, betweenness_violation);
}

AxiomReport check_strategy_proofness(const Rule& rule, std::span<const Economy> econs, const MisreportGrid& grid) {
  return run_probe(Axiom::kStrategyProof, rule, econs,
                   [&grid](const Rule& r, const Economy& e) { return manipulation_at(r, e, grid); });
}

AxiomReport check_axiom(Axiom axiom, const Rule& rule, std::span<const Economy> econs) {
  switch (axiom) {
    case Axiom::kEfficiency:
      return check_same_sided(rule, econs);
    case Axiom::kOwnPeakOnly:
      return check_own_peak_only(rule, econs);
    case Axiom::kSymmetry:
      return check_symmetry(rule, econs);
    case Axiom::kEqualDivisionGuarantee:
      return check_edg(rule, econs);
    case Axiom::kEndowmentsGuarantee:
      return check_endowments_guarantee(rule, econs);
    case Axiom::kPeakResponsive:
      return check_peak_responsive(rule, econs);
    case Axiom::kEnvyFree:
      return check_envy_free(rule, econs);
    case Axiom::kEqualDivisionLowerBound:
      return check_edlb(rule, econs);
    case Axiom::kBetweenness:
      return check_betweenness(rule, econs);
    case Axiom::kStrategyProof:
      return check_strategy_proofness(rule, econs);
    case Axiom::kNom:
      break;
  }
  throw DomainError("NOM is checked over option-set sweeps, not single economies");
}

AxiomReport replay(const AxiomReport& report, const Rule& rule) {
  if (!report.witness) throw DomainError("report carries no witness to replay");
  const std::vector<Economy> single{report.witness->economy};
  return check_axiom(report.axiom, rule, single);
}

}  // namespace allot
