#include "cppg/grid_geometry.hpp"
#include "cppg/optimizer.hpp"
#include "cppg/oracle.hpp"
#include "cppg/path.hpp"
#include "cppg/variant.hpp"

#include <benchmark/benchmark.h>

using namespace cppg;

namespace {

void BM_SolveC(benchmark::State& state) {
  const GridSpec grid(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(grid, Rational(3), Objective::linear(1, 1)));
}
BENCHMARK(BM_SolveC)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SolveD(benchmark::State& state) {
  const GridSpec grid(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(grid, Rational(5, 2), Objective::linear(1, 1)));
}
BENCHMARK(BM_SolveD)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Zigzag(benchmark::State& state) {
  const GridSpec grid(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_zigzag(grid, 2));
}
BENCHMARK(BM_Zigzag)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_VerifyRectangle(benchmark::State& state) {
  const GridSpec grid(state.range(0), state.range(0));
  const CoveringPath p = build_up_down(Rational(4), grid, Rational(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_coverage(p.stops, grid, CoverageRegion::Rectangle, Rational(3)));
  }
}
BENCHMARK(BM_VerifyRectangle)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_ParetoReport(benchmark::State& state) {
  const GridSpec grid(200, 200);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_report(grid, Rational(3), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ParetoReport)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const GridSpec grid(state.range(0), state.range(1));
  OracleLimits lim;
  lim.max_stops = 25;
  for (auto _ : state) benchmark::DoNotOptimize(exact_pareto(grid, VariantKind::Continuous, 1, lim));
}
BENCHMARK(BM_Oracle)->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
