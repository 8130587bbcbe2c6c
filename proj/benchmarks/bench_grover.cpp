#include <benchmark/benchmark.h>

#include "wgrover/analysis.hpp"
#include "wgrover/continuum.hpp"
#include "wgrover/grover.hpp"

using namespace wgrover;

static void BM_Iterate(benchmark::State& state) {
  const auto dist = uniform(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(dist, 1, 200));
  }
}
BENCHMARK(BM_Iterate)->Arg(20)->Arg(4096);

static void BM_DenseApplyG(benchmark::State& state) {
  const auto dist = uniform(state.range(0));
  StateVector s = database_state(dist);
  for (auto _ : state) {
    s = dense_apply_G(s, dist, 1);
    benchmark::DoNotOptimize(s.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseApplyG)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oN);

static void BM_TruncatedCoherent(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_coherent({0.8, 0.0}, state.range(0), 20));
  }
}
BENCHMARK(BM_TruncatedCoherent)->Arg(1)->Arg(100000);

static void BM_ComparisonTable(benchmark::State& state) {
  const auto dist = truncated_coherent({3.2, 0.0}, 1, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(comparison_table(dist));
  }
}
BENCHMARK(BM_ComparisonTable);

static void BM_ContinuumSample(benchmark::State& state) {
  const auto sol = fit_from_first_iterate(Complex{0.2236, 0.0});
  double acc = 0.0;
  for (auto _ : state) {
    for (int i = 0; i < 2000; ++i) acc += sol.eval_fa(0.01 * i) + sol.eval_fb(0.01 * i);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ContinuumSample);

BENCHMARK_MAIN();
