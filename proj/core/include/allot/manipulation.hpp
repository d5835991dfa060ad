#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "allot/axioms.hpp"
#include "allot/economy.hpp"
#include "allot/rules.hpp"
#include "allot/sampling.hpp"

namespace allot {

/// Closed interval [lo, hi] of attainable amounts.
struct OptionInterval {
  Rat lo;
  Rat hi;

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const OptionInterval&, const OptionInterval&) = default;
};

using OpponentProfile = std::vector<Preference>;

/// Who is being examined: agent index, social endowment, number of agents
/// and (for reallocation rules) the fixed individual endowments.
struct AgentSetting {
  std::size_t agent = 0;
  Rat omega = 1;
  std::size_t n = 2;
  std::optional<std::vector<Rat>> endowments;

  /// omega/n, or the agent's own endowment when endowments are fixed.
  Rat reference() const;
  /// Reference point of opponent slot k (k-th agent other than `agent`).
  Rat opponent_reference(std::size_t k) const;
  /// Economy with `own` at the agent's seat and `opponents` elsewhere.
  Economy economy(const Preference& own, std::span<const Preference> opponents) const;
};

/// Option set of any simple rule: the amounts between the peak and the
/// reference point, capped at omega.
OptionInterval simple_option_set(const Rat& peak, const AgentSetting& setting);
OptionInterval simple_option_set(const Rat& peak, const Rat& omega, std::size_t n);

/// Opponent profile under which every simple rule gives the agent exactly x,
/// for any x in [0, omega]: every opponent is satiated at a peak on its own
/// side of its reference point. Empty outside [0, omega].
std::optional<OpponentProfile> exact_outcome_profile(const AgentSetting& setting, const Rat& x);

/// How opponent profiles are sampled. Profiles are produced in a fixed order:
///   1. every opponent at its reference point,
///   2. profiles leaving exactly x for the agent, x on the fine grid,
///   3. identical opponents with peaks on the fine grid,
///   4. two-level profiles on the coarse grid (n >= 3),
///   5. seeded random profiles.
struct OpponentGrid {
  Rat step = rat(1, 60);       ///< fine grid spacing, as a fraction of omega
  long range = 2;              ///< opponent peaks range over [0, range * omega]
  Rat pair_step = rat(1, 12);  ///< coarse grid spacing for two-level profiles
  std::size_t random_profiles = 32;
  std::uint64_t seed = 0x5eed;
  std::vector<SlopePair> slopes{{Rat(1), Rat(1)}};

  std::string describe() const;
};

std::vector<OpponentProfile> opponent_profiles(const AgentSetting& setting, const OpponentGrid& grid);

/// Finite sample of an option set. Outcome k comes from profile k, so two
/// sets built over the same profile list are aligned profile by profile.
class SampledOptionSet {
 public:
  SampledOptionSet(std::shared_ptr<const std::vector<OpponentProfile>> profiles, AgentSetting setting,
                   Preference reported, std::string grid_spec);

  void add(const Rat& outcome);

  std::span<const Rat> outcomes() const noexcept { return outcomes_; }
  /// Distinct outcomes, ascending.
  std::vector<Rat> distinct() const;
  std::size_t size() const noexcept { return outcomes_.size(); }
  const Rat& min() const;
  const Rat& max() const;
  bool contains(const Rat& x) const { return first_profile_.count(x) != 0; }

  /// Opponent profile that first produced x.
  const OpponentProfile& witness(const Rat& x) const;
  /// Full economy realising x when the agent reports `reported()`.
  Economy witness_economy(const Rat& x) const;

  const Preference& reported() const noexcept { return reported_; }
  const AgentSetting& setting() const noexcept { return setting_; }
  const std::string& grid_spec() const noexcept { return grid_spec_; }
  bool aligned_with(const SampledOptionSet& other) const { return profiles_ == other.profiles_; }

 private:
  std::shared_ptr<const std::vector<OpponentProfile>> profiles_;
  AgentSetting setting_;
  Preference reported_;
  std::string grid_spec_;
  std::vector<Rat> outcomes_;
  std::map<Rat, std::size_t> first_profile_;
};

SampledOptionSet option_set_sampled(const Rule& rule, const AgentSetting& setting, const Preference& reported,
                                    const OpponentGrid& grid = {});

enum class Exactness { kExact, kSampled };
std::string_view exactness_name(Exactness e);

struct ManipulationVerdict {
  bool is_manipulation = false;
  bool is_obvious = false;
  /// Every misreport outcome beats some truthful outcome.
  bool by_definition = false;
  /// The misreport's worst outcome beats the truthful worst outcome.
  bool by_worst_case = false;
  Rat worst_truth;
  Rat worst_misreport;
  Exactness exactness = Exactness::kSampled;
};

/// Literal evaluation: for each x' in `misreport` some x in `truth` with x' P x.
bool obvious_by_definition(const Preference& truth_pref, std::span<const Rat> truth, std::span<const Rat> misreport);
/// W(R, misreport) P W(R, truth).
bool obvious_by_worst_case(const Preference& truth_pref, std::span<const Rat> truth, std::span<const Rat> misreport);

/// Exact verdict on closed intervals.
ManipulationVerdict is_obvious_manipulation(const Preference& truth_pref, const OptionInterval& truth,
                                            const OptionInterval& misreport);
/// Sampled verdict; both forms are evaluated and must agree.
ManipulationVerdict is_obvious_manipulation(const Preference& truth_pref, const SampledOptionSet& truth,
                                            const SampledOptionSet& misreport);

/// One examined (preference, omega, n, agent) situation.
struct NomCase {
  Preference truth = Preference::single_peaked(0);
  AgentSetting setting;
};

struct SearchOptions {
  MisreportGrid misreports;
  OpponentGrid opponents;
  /// Sample option sets even for rules with closed-form option sets.
  bool force_sampled = false;
};

/// Counts literal-form versus worst-case-form evaluations on every finite
/// (truth, misreport) pair the search produced.
struct EquivalenceStats {
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
};

struct ManipulationCertificate {
  NomCase where;
  Preference misreport = Preference::single_peaked(0);
  ManipulationVerdict verdict;
  std::optional<SampledOptionSet> truth_set;
  std::optional<SampledOptionSet> misreport_set;
  std::optional<OptionInterval> truth_interval;
  std::optional<OptionInterval> misreport_interval;
};

/// First misreport in grid order that is obviously profitable, if any.
std::optional<ManipulationCertificate> find_obvious_manipulation(const Rule& rule, const NomCase& where,
                                                                 const SearchOptions& options = {},
                                                                 EquivalenceStats* stats = nullptr);

/// Random (preference, omega, n) cases, one entry per agent seat.
std::vector<NomCase> standard_sweep(std::uint64_t seed, std::size_t count, std::span<const std::size_t> agent_counts,
                                    bool with_endowments = false);

/// NOM cases built from each agent of an economy.
std::vector<NomCase> sweep_of(const Economy& econ);

struct NomReport {
  AxiomReport report;
  std::optional<ManipulationCertificate> certificate;
  Exactness exactness = Exactness::kSampled;
  std::size_t cases_checked = 0;
};

NomReport check_nom(const Rule& rule, std::span<const NomCase> sweep, const SearchOptions& options = {},
                    EquivalenceStats* stats = nullptr);

/// Re-runs the search on the certificate's case; must reproduce.
std::optional<ManipulationCertificate> replay(const ManipulationCertificate& cert, const Rule& rule,
                                              const SearchOptions& options = {});

}  // namespace allot
