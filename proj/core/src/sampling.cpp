#include "allot/sampling.hpp"

namespace allot {

const std::vector<SlopePair>& slope_catalogue() {
  static const std::vector<SlopePair> catalogue{
      {Rat(1), Rat(1)}, {Rat(1), Rat(3)}, {Rat(3), Rat(1)}, {Rat(1), Rat(10)}, {Rat(10), Rat(1)}};
  return catalogue;
}

EconomySampler::EconomySampler(std::uint64_t seed, SamplingOptions options) : rng_(seed), options_(options) {
  if (options_.min_agents < 2 || options_.max_agents < options_.min_agents) {
    throw DomainError("sampler needs 2 <= min_agents <= max_agents");
  }
  if (options_.min_omega < 1 || options_.max_omega < options_.min_omega) {
    throw DomainError("sampler needs 1 <= min_omega <= max_omega");
  }
}

Rat EconomySampler::random_rational(const Rat& bound) {
  std::uniform_int_distribution<long> den_dist(1, options_.max_denominator);
  const long den = den_dist(rng_);
  // numerator in [0, floor(bound * den)]
  const Rat scaled = bound * den;
  const mpz_class top = scaled.get_num() / scaled.get_den();
  std::uniform_int_distribution<long> num_dist(0, top.get_si());
  return rat(num_dist(rng_), den);
}

SlopePair EconomySampler::random_slopes() { return slope_catalogue()[random_index(slope_catalogue().size())]; }

std::size_t EconomySampler::random_index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
  return dist(rng_);
}

bool EconomySampler::coin(double p) {
  std::bernoulli_distribution dist(p);
  return dist(rng_);
}

Economy EconomySampler::next() {
  std::uniform_int_distribution<std::size_t> n_dist(options_.min_agents, options_.max_agents);
  std::uniform_int_distribution<long> omega_dist(options_.min_omega, options_.max_omega);
  const std::size_t n = n_dist(rng_);
  const Rat omega = omega_dist(rng_);
  const Rat share = omega / static_cast<unsigned long>(n);
  const Rat peak_bound = omega * options_.peak_range;

  std::optional<std::vector<Rat>> endowments;
  if (options_.with_endowments) {
    std::vector<Rat> weights;
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      weights.push_back(random_rational(Rat(1)));
      total += weights.back();
    }
    if (total == 0) {
      weights.assign(n, Rat(1));
      total = static_cast<unsigned long>(n);
    }
    for (Rat& w : weights) w = w * omega / total;
    endowments = std::move(weights);
  }

  std::vector<Preference> prefs;
  prefs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && coin(options_.duplicate_probability)) {
      prefs.push_back(prefs[random_index(i)]);
      continue;
    }
    Rat lo = random_rational(peak_bound);
    if (coin(options_.reference_peak_probability)) lo = endowments ? (*endowments)[i] : share;
    const auto [left, right] = random_slopes();
    if (options_.plateaus && !coin(options_.degenerate_plateau_probability)) {
      Rat hi = lo + random_rational(omega);
      prefs.push_back(Preference::single_plateaued(std::move(lo), std::move(hi), left, right));
    } else {
      prefs.push_back(Preference::single_peaked(std::move(lo), left, right));
    }
  }
  return Economy(std::move(prefs), omega, std::move(endowments));
}

std::vector<Economy> EconomySampler::draw(std::size_t count) {
  std::vector<Economy> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(next());
  return out;
}

namespace {

Economy peaks_economy(std::initializer_list<Rat> peaks, const Rat& omega) {
  const std::vector<Rat> v(peaks);
  return make_economy(v, omega);
}

}  // namespace

std::vector<NamedEconomy> witness_economies() {
  std::vector<NamedEconomy> out;
  // Agent 1 prefers 0 to 1/2 although its peak is 1/3.
  out.push_back({"ced-obvious-manipulation",
                 Economy({Preference::single_peaked(rat(1, 3), 1, 3), Preference::single_peaked(0)}, 1)});
  out.push_back({"worked-example", peaks_economy({rat(1, 2), rat(3, 2), rat(5, 2)}, 3)});
  out.push_back({"equal-division-inefficient", peaks_economy({0, 1}, 1)});
  out.push_back({"star-special-profile", peaks_economy({rat(1, 4), rat(3, 4), rat(1, 3)}, 1)});
  out.push_back({"bar-special-profile", peaks_economy({3, 3, 0}, 3)});
  out.push_back({"hat-lowest-agent", peaks_economy({0, 1, 1}, 3)});
  out.push_back({"hat-above-equal-share", peaks_economy({0, rat(1, 2), rat(1, 2)}, 3)});
  out.push_back({"underline-special-profile", peaks_economy({rat(1, 4), 2, 2, 2}, 4)});
  out.push_back({"underline-special-profile-steep",
                 Economy({Preference::single_peaked(rat(1, 4), 10, 1), Preference::single_peaked(2),
                          Preference::single_peaked(2), Preference::single_peaked(2)},
                         4)});
  out.push_back({"balanced", peaks_economy({0, 0, 3}, 3)});
  out.push_back({"equal-share-peak-supply", peaks_economy({rat(1, 2), 0}, 1)});
  return out;
}

std::vector<Economy> standard_suite(std::uint64_t seed, std::size_t count, SamplingOptions options) {
  std::vector<Economy> out;
  if (!options.with_endowments && !options.plateaus) {
    for (NamedEconomy& w : witness_economies()) out.push_back(std::move(w.economy));
  }
  EconomySampler sampler(seed, options);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.next());
  return out;
}

std::vector<ClaimsProblem> random_claims_problems(std::uint64_t seed, std::size_t count) {
  SamplingOptions opts;
  EconomySampler sampler(seed, opts);
  std::vector<ClaimsProblem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + sampler.random_index(6);
    std::vector<Rat> claims;
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sampler.coin(0.25)) {
        claims.push_back(claims[sampler.random_index(i)]);
      } else {
        claims.push_back(sampler.random_rational(Rat(5)));
      }
      total += claims.back();
    }
    Rat endowment = total == 0 ? Rat(0) : Rat(sampler.random_rational(Rat(1)) * total);
    if (sampler.coin(0.05)) endowment = total;
    out.emplace_back(std::move(claims), std::move(endowment));
  }
  return out;
}

}  // namespace allot
