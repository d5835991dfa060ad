#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "allot/claims.hpp"
#include "allot/economy.hpp"

namespace allot {

using SlopePair = std::pair<Rat, Rat>;

/// Slopes (left, right) used for perturbation and sampling:
/// (1,1), (1,3), (3,1), (1,10), (10,1).
const std::vector<SlopePair>& slope_catalogue();

struct SamplingOptions {
  std::size_t min_agents = 2;
  std::size_t max_agents = 6;
  long min_omega = 1;
  long max_omega = 5;
  long max_denominator = 60;
  /// Peaks are drawn from [0, peak_range * omega].
  long peak_range = 2;
  /// Chance that an agent copies an earlier agent's preference.
  double duplicate_probability = 0.2;
  /// Chance that a peak is pinned to omega/n (or to the agent's endowment).
  double reference_peak_probability = 0.15;
  bool with_endowments = false;
  bool plateaus = false;
  /// Chance that a plateau collapses to a single point.
  double degenerate_plateau_probability = 0.2;
};

/// Seeded generator of random rational economies. Identical seeds and
/// options give identical sequences on a given standard library.
class EconomySampler {
 public:
  explicit EconomySampler(std::uint64_t seed, SamplingOptions options = {});

  Economy next();
  std::vector<Economy> draw(std::size_t count);

  /// Rational in [0, bound] with denominator at most max_denominator.
  Rat random_rational(const Rat& bound);
  SlopePair random_slopes();
  std::size_t random_index(std::size_t bound);
  bool coin(double p);

  const SamplingOptions& options() const noexcept { return options_; }

 private:
  std::mt19937_64 rng_;
  SamplingOptions options_;
};

struct NamedEconomy {
  std::string label;
  Economy economy;
};

/// Hand-picked economies that exhibit the behaviour of the classical and
/// gallery rules (injected ahead of random samples).
std::vector<NamedEconomy> witness_economies();

/// Witness economies followed by `count` random ones.
std::vector<Economy> standard_suite(std::uint64_t seed, std::size_t count, SamplingOptions options = {});

/// Random claims problems with 1..6 claimants and E drawn in [0, sum c].
std::vector<ClaimsProblem> random_claims_problems(std::uint64_t seed, std::size_t count);

}  // namespace allot
