#include "allot/manipulation.hpp"

#include <algorithm>
#include <random>

namespace allot {
namespace {

std::vector<Rat> disutilities(const Preference& pref, std::span<const Rat> xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const Rat& x : xs) out.push_back(pref.disutility(x));
  return out;
}

Preference peaked(const Rat& peak, const SlopePair& slopes) {
  return Preference::single_peaked(peak, slopes.first, slopes.second);
}

}  // namespace

OptionInterval simple_option_set(const Rat& peak, const AgentSetting& setting) {
  const Rat reference = setting.reference();
  if (peak > reference) return {reference, std::min(peak, setting.omega)};
  return {peak, reference};
}

OptionInterval simple_option_set(const Rat& peak, const Rat& omega, std::size_t n) {
  if (n < 2) throw DomainError("option sets need at least two agents");
  return simple_option_set(peak, AgentSetting{0, omega, n, std::nullopt});
}

Rat AgentSetting::reference() const {
  if (endowments) return endowments->at(agent);
  return omega / static_cast<unsigned long>(n);
}

Rat AgentSetting::opponent_reference(std::size_t k) const {
  if (endowments) return endowments->at(k < agent ? k : k + 1);
  return omega / static_cast<unsigned long>(n);
}

Economy AgentSetting::economy(const Preference& own, std::span<const Preference> opponents) const {
  if (opponents.size() + 1 != n) throw DomainError("opponent profile has the wrong size");
  std::vector<Preference> prefs(opponents.begin(), opponents.end());
  prefs.insert(prefs.begin() + static_cast<std::ptrdiff_t>(agent), own);
  return Economy(std::move(prefs), omega, endowments);
}

std::optional<OpponentProfile> exact_outcome_profile(const AgentSetting& setting, const Rat& x) {
  if (x < 0 || x > setting.omega) return std::nullopt;
  const Rat own = setting.reference();
  const Rat rest = setting.omega - own;
  OpponentProfile profile;
  profile.reserve(setting.n - 1);
  for (std::size_t k = 0; k + 1 < setting.n; ++k) {
    const Rat ref = setting.opponent_reference(k);
    // Above the reference, opponents shrink proportionally toward zero (rest > 0
    // whenever x > own); below it, they share the surplus equally.
    Rat p = x > own ? Rat(ref * (setting.omega - x) / rest)
                    : Rat(ref + (own - x) / static_cast<unsigned long>(setting.n - 1));
    profile.push_back(Preference::single_peaked(std::move(p)));
  }
  return profile;
}

std::string OpponentGrid::describe() const {
  return "fine step " + to_string(step) + "*omega on [0," + std::to_string(range) + "*omega], pair step " +
         to_string(pair_step) + "*omega, " + std::to_string(random_profiles) + " random profiles, " +
         std::to_string(slopes.size()) + " slope pair(s)";
}

std::vector<OpponentProfile> opponent_profiles(const AgentSetting& setting, const OpponentGrid& grid) {
  if (setting.n < 2) throw DomainError("option sets need at least two agents");
  if (grid.step <= 0 || grid.pair_step <= 0) throw DomainError("grid steps must be positive");
  const std::size_t m = setting.n - 1;
  const Rat top = setting.omega * grid.range;
  const Rat fine = grid.step * setting.omega;
  const Rat coarse = grid.pair_step * setting.omega;
  std::vector<OpponentProfile> out;

  {
    OpponentProfile at_reference;
    for (std::size_t k = 0; k < m; ++k) at_reference.push_back(Preference::single_peaked(setting.opponent_reference(k)));
    out.push_back(std::move(at_reference));
  }
  for (Rat x = 0; x <= top; x += fine) {
    if (auto profile = exact_outcome_profile(setting, x)) out.push_back(std::move(*profile));
  }
  for (const SlopePair& slopes : grid.slopes) {
    for (Rat q = 0; q <= top; q += fine) out.emplace_back(m, peaked(q, slopes));
  }
  if (m >= 2) {
    std::vector<Rat> coarse_values;
    for (Rat q = 0; q <= top; q += coarse) coarse_values.push_back(q);
    std::vector<std::optional<Rat>> tails{std::nullopt};
    if (m >= 3) {
      tails.push_back(Rat(0));
      tails.push_back(setting.omega / static_cast<unsigned long>(setting.n));
      tails.push_back(top);
    }
    const SlopePair unit{Rat(1), Rat(1)};
    for (const Rat& q1 : coarse_values) {
      for (const Rat& q2 : coarse_values) {
        for (const std::optional<Rat>& tail : tails) {
          OpponentProfile profile{peaked(q1, unit)};
          for (std::size_t k = 1; k < m; ++k) profile.push_back(peaked(k == 1 || !tail ? q2 : *tail, unit));
          out.push_back(std::move(profile));
        }
      }
    }
  }
  if (grid.random_profiles > 0) {
    SamplingOptions opts;
    opts.peak_range = grid.range;
    EconomySampler sampler(grid.seed ^ (setting.agent * 0x9e3779b97f4a7c15ULL) ^ setting.n, opts);
    for (std::size_t r = 0; r < grid.random_profiles; ++r) {
      OpponentProfile profile;
      for (std::size_t k = 0; k < m; ++k) {
        Rat p = sampler.random_rational(top);
        if (sampler.coin(0.2)) p = setting.opponent_reference(k);
        profile.push_back(peaked(p, sampler.random_slopes()));
      }
      out.push_back(std::move(profile));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SampledOptionSet::SampledOptionSet(std::shared_ptr<const std::vector<OpponentProfile>> profiles, AgentSetting setting,
                                   Preference reported, std::string grid_spec)
    : profiles_(std::move(profiles)),
      setting_(std::move(setting)),
      reported_(std::move(reported)),
      grid_spec_(std::move(grid_spec)) {}

void SampledOptionSet::add(const Rat& outcome) {
  if (outcomes_.size() >= profiles_->size()) throw DomainError("more outcomes than opponent profiles");
  first_profile_.try_emplace(outcome, outcomes_.size());
  outcomes_.push_back(outcome);
}

std::vector<Rat> SampledOptionSet::distinct() const {
  std::vector<Rat> out;
  out.reserve(first_profile_.size());
  for (const auto& [x, _] : first_profile_) out.push_back(x);
  return out;
}

const Rat& SampledOptionSet::min() const {
  if (first_profile_.empty()) throw DomainError("empty option set");
  return first_profile_.begin()->first;
}

const Rat& SampledOptionSet::max() const {
  if (first_profile_.empty()) throw DomainError("empty option set");
  return first_profile_.rbegin()->first;
}

const OpponentProfile& SampledOptionSet::witness(const Rat& x) const {
  const auto it = first_profile_.find(x);
  if (it == first_profile_.end()) throw DomainError(to_string(x) + " is not in the sampled option set");
  return (*profiles_)[it->second];
}

Economy SampledOptionSet::witness_economy(const Rat& x) const { return setting_.economy(reported_, witness(x)); }

SampledOptionSet option_set_sampled(const Rule& rule, const AgentSetting& setting, const Preference& reported,
                                    const OpponentGrid& grid) {
  auto profiles = std::make_shared<const std::vector<OpponentProfile>>(opponent_profiles(setting, grid));
  SampledOptionSet set(profiles, setting, reported, grid.describe());
  for (const OpponentProfile& profile : *profiles) set.add(rule(setting.economy(reported, profile))[setting.agent]);
  return set;
}

std::string_view exactness_name(Exactness e) { return e == Exactness::kExact ? "EXACT" : "SAMPLED"; }

// ---------------------------------------------------------------------------

bool obvious_by_definition(const Preference& truth_pref, std::span<const Rat> truth, std::span<const Rat> misreport) {
  if (truth.empty() || misreport.empty()) throw DomainError("option sets must be nonempty");
  const std::vector<Rat> d_truth = disutilities(truth_pref, truth);
  for (const Rat& x_mis : misreport) {
    const Rat d_mis = truth_pref.disutility(x_mis);
    const bool beaten = std::any_of(d_truth.begin(), d_truth.end(), [&](const Rat& d) { return d_mis < d; });
    if (!beaten) return false;
  }
  return true;
}

bool obvious_by_worst_case(const Preference& truth_pref, std::span<const Rat> truth, std::span<const Rat> misreport) {
  return truth_pref.strictly_prefers(worst(truth_pref, misreport), worst(truth_pref, truth));
}

ManipulationVerdict is_obvious_manipulation(const Preference& truth_pref, const OptionInterval& truth,
                                            const OptionInterval& misreport) {
  ManipulationVerdict v;
  v.exactness = Exactness::kExact;
  v.worst_truth = worst_of_interval(truth_pref, truth.lo, truth.hi);
  v.worst_misreport = worst_of_interval(truth_pref, misreport.lo, misreport.hi);
  v.by_worst_case = truth_pref.strictly_prefers(v.worst_misreport, v.worst_truth);
  // On intervals every misreport outcome beats some truthful one exactly when
  // the misreport's maximal disutility is below the truthful maximum.
  v.by_definition = truth_pref.disutility(v.worst_misreport) < truth_pref.disutility(v.worst_truth);
  v.is_obvious = v.by_worst_case;
  // Some attainable misreport outcome beats some attainable truthful outcome.
  const Rat best_mis = misreport.contains(truth_pref.peak())
                           ? truth_pref.peak()
                           : (truth_pref.disutility(misreport.lo) <= truth_pref.disutility(misreport.hi) ? misreport.lo
                                                                                                         : misreport.hi);
  v.is_manipulation = truth_pref.strictly_prefers(best_mis, v.worst_truth);
  return v;
}

ManipulationVerdict is_obvious_manipulation(const Preference& truth_pref, const SampledOptionSet& truth,
                                            const SampledOptionSet& misreport) {
  ManipulationVerdict v;
  v.exactness = Exactness::kSampled;
  const std::vector<Rat> t = truth.distinct();
  const std::vector<Rat> m = misreport.distinct();
  v.worst_truth = worst(truth_pref, t);
  v.worst_misreport = worst(truth_pref, m);
  v.by_worst_case = obvious_by_worst_case(truth_pref, t, m);
  v.by_definition = obvious_by_definition(truth_pref, t, m);
  v.is_obvious = v.by_worst_case;
  if (truth.aligned_with(misreport)) {
    const std::size_t k = std::min(truth.size(), misreport.size());
    for (std::size_t i = 0; i < k && !v.is_manipulation; ++i) {
      v.is_manipulation = truth_pref.strictly_prefers(misreport.outcomes()[i], truth.outcomes()[i]);
    }
  } else {
    v.is_manipulation = std::any_of(m.begin(), m.end(), [&](const Rat& x) {
      return truth_pref.strictly_prefers(x, v.worst_truth);
    });
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<ManipulationCertificate> search_exact(const NomCase& where, const SearchOptions& options,
                                                    EquivalenceStats* stats) {
  const OptionInterval truth = simple_option_set(where.truth.peak(), where.setting);
  for (Preference& lie : misreport_candidates(where.truth, where.setting.omega, options.misreports)) {
    const OptionInterval mis = simple_option_set(lie.peak(), where.setting);
    ManipulationVerdict v = is_obvious_manipulation(where.truth, truth, mis);
    if (stats) {
      ++stats->pairs;
      if (v.by_definition != v.by_worst_case) ++stats->disagreements;
    }
    if (v.is_obvious) {
      ManipulationCertificate cert{where, std::move(lie), std::move(v)};
      cert.truth_interval = truth;
      cert.misreport_interval = mis;
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<ManipulationCertificate> search_sampled(const Rule& rule, const NomCase& where,
                                                      const SearchOptions& options, EquivalenceStats* stats) {
  const AgentSetting& setting = where.setting;
  auto profiles =
      std::make_shared<const std::vector<OpponentProfile>>(opponent_profiles(setting, options.opponents));
  const std::string grid_desc = options.opponents.describe();

  SampledOptionSet truth(profiles, setting, where.truth, grid_desc);
  for (const OpponentProfile& profile : *profiles) truth.add(rule(setting.economy(where.truth, profile))[setting.agent]);
  const std::vector<Rat> truth_distinct = truth.distinct();
  const Rat worst_truth_d = where.truth.disutility(worst(where.truth, truth_distinct));

  for (Preference& lie : misreport_candidates(where.truth, setting.omega, options.misreports)) {
    SampledOptionSet mis(profiles, setting, lie, grid_desc);
    bool survived = true;
    for (const OpponentProfile& profile : *profiles) {
      const Rat x = rule(setting.economy(lie, profile))[setting.agent];
      mis.add(x);
      // One misreport outcome no better than the truthful worst refutes obviousness.
      if (where.truth.disutility(x) >= worst_truth_d) {
        survived = false;
        break;
      }
    }
    if (stats) {
      const std::vector<Rat> m = mis.distinct();
      ++stats->pairs;
      if (obvious_by_definition(where.truth, truth_distinct, m) != obvious_by_worst_case(where.truth, truth_distinct, m)) {
        ++stats->disagreements;
      }
    }
    if (!survived) continue;
    ManipulationVerdict v = is_obvious_manipulation(where.truth, truth, mis);
    if (!v.is_obvious) continue;
    ManipulationCertificate cert{where, std::move(lie), std::move(v)};
    cert.truth_set = truth;
    cert.misreport_set = std::move(mis);
    return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ManipulationCertificate> find_obvious_manipulation(const Rule& rule, const NomCase& where,
                                                                 const SearchOptions& options,
                                                                 EquivalenceStats* stats) {
  if (where.setting.agent >= where.setting.n) throw DomainError("agent index out of range");
  if (!where.truth.is_single_peaked()) throw DomainError("true preference must be single-peaked");
  if (rule.family() != SimpleFamily::kNone && !options.force_sampled) return search_exact(where, options, stats);
  return search_sampled(rule, where, options, stats);
}

std::vector<NomCase> standard_sweep(std::uint64_t seed, std::size_t count, std::span<const std::size_t> agent_counts,
                                    bool with_endowments) {
  if (agent_counts.empty()) throw DomainError("sweep needs at least one agent count");
  SamplingOptions opts;
  opts.with_endowments = with_endowments;
  EconomySampler sampler(seed, opts);
  std::vector<NomCase> out;
  for (std::size_t c = 0; c < count; ++c) {
    NomCase base;
    base.setting.n = agent_counts[sampler.random_index(agent_counts.size())];
    base.setting.omega = 1 + static_cast<long>(sampler.random_index(5));
    if (with_endowments) {
      std::vector<Rat> w;
      Rat total = 0;
      for (std::size_t i = 0; i < base.setting.n; ++i) {
        w.push_back(1 + static_cast<long>(sampler.random_index(6)));
        total += w.back();
      }
      for (Rat& x : w) x = x * base.setting.omega / total;
      base.setting.endowments = std::move(w);
    }
    for (std::size_t agent = 0; agent < base.setting.n; ++agent) {
      NomCase nc = base;
      nc.setting.agent = agent;
      Rat peak = sampler.random_rational(nc.setting.omega * 2);
      if (sampler.coin(0.1)) peak = nc.setting.reference();
      const auto [a, b] = sampler.random_slopes();
      nc.truth = Preference::single_peaked(std::move(peak), a, b);
      out.push_back(std::move(nc));
    }
  }
  return out;
}

std::vector<NomCase> sweep_of(const Economy& econ) {
  std::vector<NomCase> out;
  for (std::size_t i = 0; i < econ.size(); ++i) {
    NomCase nc;
    nc.truth = econ.pref(i);
    nc.setting.agent = i;
    nc.setting.omega = econ.omega();
    nc.setting.n = econ.size();
    if (econ.has_endowments()) {
      const auto w = econ.endowments();
      nc.setting.endowments = std::vector<Rat>(w.begin(), w.end());
    }
    out.push_back(std::move(nc));
  }
  return out;
}

NomReport check_nom(const Rule& rule, std::span<const NomCase> sweep, const SearchOptions& options,
                    EquivalenceStats* stats) {
  NomReport out;
  out.report.axiom = Axiom::kNom;
  out.report.rule = rule.name();
  out.exactness =
      rule.family() != SimpleFamily::kNone && !options.force_sampled ? Exactness::kExact : Exactness::kSampled;
  for (const NomCase& nc : sweep) {
    if (nc.setting.n < rule.min_agents()) continue;
    if (rule.domain() == RuleDomain::kWithEndowments && !nc.setting.endowments) continue;
    if (rule.domain() != RuleDomain::kWithEndowments && nc.setting.endowments) continue;
    ++out.cases_checked;
    auto cert = find_obvious_manipulation(rule, nc, options, stats);
    if (!cert) continue;

    const ManipulationVerdict& v = cert->verdict;
    Witness w{Economy(std::vector<Preference>(nc.setting.n, nc.truth), nc.setting.omega, nc.setting.endowments),
              {nc.setting.agent}, ""};
    if (cert->truth_set) {
      w.economy = cert->truth_set->witness_economy(v.worst_truth);
      w.variant = cert->misreport_set->witness_economy(v.worst_misreport);
    } else if (auto profile = exact_outcome_profile(nc.setting, v.worst_truth)) {
      w.economy = nc.setting.economy(nc.truth, *profile);
      if (auto mis_profile = exact_outcome_profile(nc.setting, v.worst_misreport)) {
        w.variant = nc.setting.economy(cert->misreport, *mis_profile);
      }
    }
    w.details = "agent " + std::to_string(nc.setting.agent + 1) + " with " + describe(nc.truth) + " misreports " +
                describe(cert->misreport) + ": worst truthful outcome " + to_string(v.worst_truth) + " (d=" +
                to_string(nc.truth.disutility(v.worst_truth)) + ") vs worst misreport outcome " +
                to_string(v.worst_misreport) + " (d=" + to_string(nc.truth.disutility(v.worst_misreport)) + ")";
    out.report.verdict = Verdict::kFail;
    out.report.witness = std::move(w);
    out.certificate = std::move(cert);
    break;
  }
  out.report.economies_checked = out.cases_checked;
  return out;
}

std::optional<ManipulationCertificate> replay(const ManipulationCertificate& cert, const Rule& rule,
                                              const SearchOptions& options) {
  return find_obvious_manipulation(rule, cert.where, options);
}

}  // namespace allot
