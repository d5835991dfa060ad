#include <benchmark/benchmark.h>

#include "allot/manipulation.hpp"
#include "allot/registry.hpp"

namespace {

using namespace allot;

void BM_Allocate(benchmark::State& state, const char* name) {
  const Rule rule = RuleFactory().make(name);
  const Economy econ = [&] {
    SamplingOptions opts;
    opts.min_agents = opts.max_agents = static_cast<std::size_t>(state.range(0));
    return EconomySampler(7, opts).next();
  }();
  for (auto _ : state) benchmark::DoNotOptimize(rule(econ));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Allocate, uniform, "uniform")->RangeMultiplier(4)->Range(4, 256)->Complexity();
BENCHMARK_CAPTURE(BM_Allocate, ced, "ced")->RangeMultiplier(4)->Range(4, 256)->Complexity();
BENCHMARK_CAPTURE(BM_Allocate, simple_cel, "simple:cel")->RangeMultiplier(4)->Range(4, 256)->Complexity();
BENCHMARK_CAPTURE(BM_Allocate, appendix_b, "simple:appendix-b")->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_CeaLevel(benchmark::State& state) {
  std::vector<Rat> claims;
  Rat total = 0;
  for (long k = 0; k < state.range(0); ++k) {
    claims.push_back(rat(k * 7 % 13 + 1, k % 5 + 1));
    total += claims.back();
  }
  const ClaimsProblem cp(claims, total / 3);
  for (auto _ : state) benchmark::DoNotOptimize(cea_level(cp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CeaLevel)->RangeMultiplier(8)->Range(8, 4096)->Complexity();

void BM_SampledOptionSet(benchmark::State& state) {
  const AgentSetting setting{0, 1, static_cast<std::size_t>(state.range(0)), std::nullopt};
  const Preference truth = Preference::single_peaked(rat(1, 3), 1, 3);
  const Rule rule = ced_rule();
  for (auto _ : state) benchmark::DoNotOptimize(option_set_sampled(rule, setting, truth));
}
BENCHMARK(BM_SampledOptionSet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FindManipulation(benchmark::State& state, const char* name, bool force_sampled) {
  const Rule rule = RuleFactory().make(name);
  const NomCase where{Preference::single_peaked(rat(5, 4), 3, 1), AgentSetting{0, 1, 2, std::nullopt}};
  SearchOptions options;
  options.force_sampled = force_sampled;
  for (auto _ : state) benchmark::DoNotOptimize(find_obvious_manipulation(rule, where, options));
}
BENCHMARK_CAPTURE(BM_FindManipulation, uniform_exact, "uniform", false);
BENCHMARK_CAPTURE(BM_FindManipulation, uniform_sampled, "uniform", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FindManipulation, ced_sampled, "ced", true)->Unit(benchmark::kMillisecond);

void BM_CheckAxiom(benchmark::State& state, Axiom axiom) {
  const Rule rule = uniform_rule();
  const std::vector<Economy> econs = standard_suite(3, 200);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(axiom, rule, econs));
}
BENCHMARK_CAPTURE(BM_CheckAxiom, efficiency, Axiom::kEfficiency)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckAxiom, own_peak_only, Axiom::kOwnPeakOnly)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckAxiom, envy_free, Axiom::kEnvyFree)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
