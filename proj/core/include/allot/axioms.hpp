#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "allot/economy.hpp"
#include "allot/rules.hpp"
#include "allot/sampling.hpp"

namespace allot {

enum class Axiom {
  kEfficiency,  ///< checked as same-sidedness, its equivalent on single-peaked profiles
  kOwnPeakOnly,
  kSymmetry,
  kEqualDivisionGuarantee,
  kEndowmentsGuarantee,
  kPeakResponsive,
  kEnvyFree,
  kEqualDivisionLowerBound,
  kBetweenness,
  kStrategyProof,
  kNom,
};

/// CLI spelling: efficiency, own-peak-only, symmetry, edg,
/// endowments-guarantee, peak-responsive, envy-free, edlb, betweenness, sp, nom.
std::string_view axiom_name(Axiom axiom);
Axiom axiom_by_name(std::string_view name);
const std::vector<Axiom>& all_axioms();

enum class Verdict { kPassOnSample, kFail };

std::string_view verdict_name(Verdict v);

struct Witness {
  Economy economy;
  std::vector<std::size_t> agents;
  std::string details;
  /// Second economy involved in the violation (a slope perturbation or a misreport).
  std::optional<Economy> variant;
};

/// Outcome of a sampled refutation. PASS_ON_SAMPLE is not a proof.
struct AxiomReport {
  Axiom axiom = Axiom::kEfficiency;
  std::string rule;
  Verdict verdict = Verdict::kPassOnSample;
  std::optional<Witness> witness;
  std::size_t economies_checked = 0;

  bool passed() const { return verdict == Verdict::kPassOnSample; }
};

/// Candidate misreports: peaks at multiples of step * omega on
/// [0, range * omega], with unit slopes or every catalogue slope pair.
struct MisreportGrid {
  Rat step = rat(1, 60);
  long range = 2;
  bool all_slopes = false;
};

std::vector<Preference> misreport_candidates(const Preference& truth, const Rat& omega, const MisreportGrid& grid);

// Single-economy probes. Each returns the first violation found, if any.
std::optional<Witness> same_sided_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> own_peak_only_violation(const Rule& rule, const Economy& econ,
                                               std::span<const SlopePair> slopes = slope_catalogue());
std::optional<Witness> symmetry_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> edg_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> endowments_guarantee_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> peak_responsive_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> envy_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> edlb_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> betweenness_violation(const Rule& rule, const Economy& econ);
std::optional<Witness> manipulation_at(const Rule& rule, const Economy& econ, const MisreportGrid& grid = {});

// Checkers over a sample. Economies outside the rule's domain are skipped.
AxiomReport check_same_sided(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_own_peak_only(const Rule& rule, std::span<const Economy> econs,
                                std::span<const SlopePair> slopes = slope_catalogue());
AxiomReport check_symmetry(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_edg(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_endowments_guarantee(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_peak_responsive(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_envy_free(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_edlb(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_betweenness(const Rule& rule, std::span<const Economy> econs);
AxiomReport check_strategy_proofness(const Rule& rule, std::span<const Economy> econs, const MisreportGrid& grid = {});

/// Runs one economy-level axiom (anything except NOM) with default settings.
AxiomReport check_axiom(Axiom axiom, const Rule& rule, std::span<const Economy> econs);

/// Re-runs the checker on the witness economy alone; a FAIL must reproduce.
AxiomReport replay(const AxiomReport& report, const Rule& rule);

}  // namespace allot
