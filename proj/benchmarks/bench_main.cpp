#include <benchmark/benchmark.h>

#include "noisyeval/interval_core.hpp"
#include "noisyeval/noise_sim.hpp"
#include "noisyeval/tagger_compare.hpp"

using namespace noisyeval;

static void BM_GeneralInterval(benchmark::State& state) {
  const auto obs = EvalObservation::create(0.9135, 0.03);
  double p = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(real_performance_interval(obs, p));
    p = p + 1e-6 <= 1.0 ? p + 1e-6 : 0.5;
  }
}
BENCHMARK(BM_GeneralInterval);

static void BM_ReasonableInterval(benchmark::State& state) {
  const auto obs = EvalObservation::create(0.9135, 0.03);
  const auto amb = AmbiguityProfile::create(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reasonable_performance_interval(obs, amb, amb.random_p()));
  }
}
BENCHMARK(BM_ReasonableInterval);

static void BM_Sweep(benchmark::State& state) {
  const auto amb = AmbiguityProfile::create(2.5);
  const TaggerEvalCase t1{"T1", EvalObservation::create(0.9135, 0.03), amb};
  const TaggerEvalCase t2{"T2", EvalObservation::create(0.9282, 0.03), amb};
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(t1, t2, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Sweep)->Arg(61)->Arg(1001);

static void BM_SimulateTrial(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.n_tokens = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_trial(cfg, trial++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateTrial)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
