// Serial reference vs OpenMP path for the sweep kernels.
//   ./bench_sweep --benchmark_filter=Positivity

#include "hop/limits.hpp"
#include "hop/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace hop;

static void BM_PositivitySweep(benchmark::State& state, Exec exec) {
  auto R = RootSystem::from_code("A2");
  auto k = Multiplicity::uniform(R, Rational(1, 2));
  auto ws = sweep_weights(R, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = positivity_sweep(R, k, ws, exec);
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.counters["weights"] = static_cast<double>(ws.size());
}
BENCHMARK_CAPTURE(BM_PositivitySweep, serial, Exec::Serial)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PositivitySweep, parallel, Exec::Parallel)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_HullAgreement(benchmark::State& state, Exec exec) {
  auto R = RootSystem::from_code("G2");
  for (auto _ : state) {
    auto r = hull_agreement(R, static_cast<std::size_t>(state.range(0)), 7, exec);
    benchmark::DoNotOptimize(r.agreements);
  }
}
BENCHMARK_CAPTURE(BM_HullAgreement, serial, Exec::Serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HullAgreement, parallel, Exec::Parallel)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_ScalingTable(benchmark::State& state, Exec exec) {
  auto R = RootSystem::from_code("A2");
  auto k = Multiplicity::uniform(R, Rational(1, 2));
  auto grid = std::vector<ComplexPoint>{ComplexPoint::real(std::vector<double>{0.2, 0.1})};
  for (auto _ : state) {
    EPolyCache cache;
    Intertwiner V(R, k);
    auto t = scaling_error_table(R, k, Weight{{1, 0}}, grid, {4, 8, 16, 32}, 20, cache, V, exec);
    benchmark::DoNotOptimize(t.rows.data());
  }
}
BENCHMARK_CAPTURE(BM_ScalingTable, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScalingTable, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
