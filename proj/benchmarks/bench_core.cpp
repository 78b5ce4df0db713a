#include <benchmark/benchmark.h>

#include <complex>

#include "quadwalk/classify.hpp"
#include "quadwalk/conformal.hpp"
#include "quadwalk/harmonic.hpp"
#include "quadwalk/oracle.hpp"
#include "quadwalk/walk_model.hpp"

using namespace quadwalk;

static void BM_Solve(benchmark::State& state) {
  const WalkModel m = catalog("gessel");
  for (auto _ : state) {
    HarmonicSolution sol = HarmonicSolution::solve(m);
    benchmark::DoNotOptimize(sol.mu());
  }
}
BENCHMARK(BM_Solve);

static void BM_EvalW(benchmark::State& state) {
  const WalkModel m = catalog("gessel");
  const ConformalMap w = build_w(build_kernel(m), angle(moments(m)));
  Complex x(0.31, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(w(x));
    x *= Complex(0.9999, 0.0001);
  }
}
BENCHMARK(BM_EvalW);

static void BM_Extract(benchmark::State& state) {
  const HarmonicSolution sol = HarmonicSolution::solve(catalog("tandem"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoeffGrid grid = sol.extract_coefficients(n);
    benchmark::DoNotOptimize(grid.f(n, n));
  }
}
BENCHMARK(BM_Extract)->Arg(10)->Arg(20)->Arg(64);

static void BM_ExitTailDp(benchmark::State& state) {
  const WalkModel m = catalog("srw");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TailFit fit = exit_tail_dp(m, {1, 1}, n);
    benchmark::DoNotOptimize(fit.fitted_slope);
  }
}
BENCHMARK(BM_ExitTailDp)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_Excursions(benchmark::State& state) {
  const WalkModel m = catalog("srw");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExcursionTable t = excursions(m, {1, 1}, {1, 1}, n);
    benchmark::DoNotOptimize(t.count(n));
  }
}
BENCHMARK(BM_Excursions)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_HarmonicityResidual(benchmark::State& state) {
  const WalkModel m = catalog("tandem");
  const CoeffGrid grid = HarmonicSolution::solve(m).extract_coefficients(30);
  for (auto _ : state) {
    ResidualReport rep = harmonicity_residual(grid, m);
    benchmark::DoNotOptimize(rep.max_relative_residual);
  }
}
BENCHMARK(BM_HarmonicityResidual);

BENCHMARK_MAIN();
