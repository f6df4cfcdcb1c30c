#include <benchmark/benchmark.h>

#include "logcap/bounds.hpp"
#include "logcap/elliptic.hpp"
#include "logcap/exact.hpp"
#include "logcap/random_sets.hpp"
#include "logcap/sweep.hpp"
#include "logcap/theta.hpp"

using namespace logcap;

namespace {

IntervalUnion random_set(int n) {
  SetSampler rng(static_cast<std::uint64_t>(1000 + n));
  return rng.unit_set(n);
}

void BM_agm_K(benchmark::State& state) {
  double k = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(agm_K(k));
    k = k < 0.98 ? k + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_agm_K);

void BM_theta3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta3(0.7, 0.2));
}
BENCHMARK(BM_theta3);

void BM_akhiezer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(akhiezer_capacity(-0.3, 0.5));
}
BENCHMARK(BM_akhiezer);

void BM_widom(benchmark::State& state) {
  const IntervalUnion e = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(widom_capacity(e));
}
BENCHMARK(BM_widom)->DenseRange(2, 8, 2);

void BM_theorem2_optimize(benchmark::State& state) {
  const IntervalUnion e = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_optimize(e));
}
BENCHMARK(BM_theorem2_optimize)->Arg(2)->Arg(3)->Arg(4);

void BM_all_bounds(benchmark::State& state) {
  const IntervalUnion e = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_bounds(e));
}
BENCHMARK(BM_all_bounds)->Arg(2)->Arg(4);

void BM_sweep_default(benchmark::State& state) {
  const SweepSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_sweep_default)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
