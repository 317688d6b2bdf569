#include <benchmark/benchmark.h>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/continuum.hpp"
#include "anharmonic/ggy.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/recurrence.hpp"
#include "anharmonic/slicing.hpp"
#include "anharmonic/specfun.hpp"

namespace {

using namespace anharmonic;

void BM_PcfScaled(benchmark::State& state) {
  double m = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::pcf_scaled(m, 40.0));
}
BENCHMARK(BM_PcfScaled)->Arg(0)->Arg(8)->Arg(64);

void BM_ZnMultisum(benchmark::State& state) {
  ModelParams p(0.2, 1.0, 1.0, 1.0);
  SliceGrid grid = build_grid(p, 3);
  int k0 = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(slicing::zn_multisum(grid, k0));
}
BENCHMARK(BM_ZnMultisum)->Arg(10)->Arg(40);

void BM_LambdaTable(benchmark::State& state) {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  int L = static_cast<int>(state.range(0));
  SliceGrid grid = build_grid(p, L);
  for (auto _ : state) {
    recurrence::LambdaTable table(grid, L, 3);
    benchmark::DoNotOptimize(table.value(L, 3, 0));
  }
}
BENCHMARK(BM_LambdaTable)->Arg(64)->Arg(256);

void BM_SolveGgy(benchmark::State& state) {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  continuum::ContinuumSeries series(p, p.beta, 1);
  auto provider = [&series](double t) { return series.s(t); };
  double h = p.beta / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ggy::solve_ggy(p, provider, p.beta, h).z_beta);
}
BENCHMARK(BM_SolveGgy)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
