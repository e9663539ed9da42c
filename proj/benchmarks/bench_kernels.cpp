#include <random>

#include <benchmark/benchmark.h>

#include "hsu/linsolve.hpp"
#include "hsu/prox.hpp"
#include "hsu/spatial_ops.hpp"

namespace {

hsu::Matrix gaussian(hsu::Index rows, hsu::Index cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  hsu::Matrix m(rows, cols);
  for (hsu::Index j = 0; j < cols; ++j)
    for (hsu::Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
  return m;
}

void BM_Tv1d(benchmark::State& state) {
  const auto len = static_cast<hsu::Index>(state.range(0));
  const hsu::Vector y = gaussian(len, 1, 1).col(0);
  for (auto _ : state) benchmark::DoNotOptimize(hsu::tv1d(y, 0.5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Tv1d)->RangeMultiplier(4)->Range(16, 16384);

void BM_ProxP(benchmark::State& state) {
  const hsu::SpatialGrid grid(state.range(0), state.range(0));
  const hsu::Matrix v = gaussian(60, grid.pixels(), 2);
  const hsu::ProxSpec spec{1e-2, 1e-2, hsu::Rho::L1, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(hsu::prox_p(v, spec, grid));
}
BENCHMARK(BM_ProxP)->Arg(20)->Arg(40)->Arg(80);

void BM_ProxHorizontalTv(benchmark::State& state) {
  const hsu::SpatialGrid grid(state.range(0), state.range(0));
  const hsu::Matrix v = gaussian(60, grid.pixels(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hsu::prox_horizontal_tv(v, 1e-2, grid));
}
BENCHMARK(BM_ProxHorizontalTv)->Arg(20)->Arg(40)->Arg(80);

void BM_ApplyDiff(benchmark::State& state) {
  const hsu::SpatialGrid grid(state.range(0), state.range(0));
  const hsu::Matrix x = gaussian(60, grid.pixels(), 4);
  const hsu::DiffOp op = hsu::stacked_op(hsu::Boundary::Periodic);
  for (auto _ : state) benchmark::DoNotOptimize(hsu::apply_diff(op, x, grid));
}
BENCHMARK(BM_ApplyDiff)->Arg(20)->Arg(80);

void BM_PeriodicLaplacianSolve(benchmark::State& state) {
  const hsu::SpatialGrid grid(state.range(0), state.range(0));
  const hsu::ShiftedLaplacianSolver solver(grid, hsu::Boundary::Periodic);
  const hsu::Matrix b = gaussian(60, grid.pixels(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(b));
}
BENCHMARK(BM_PeriodicLaplacianSolve)->Arg(20)->Arg(40)->Arg(80);

void BM_ReflexiveLaplacianSolve(benchmark::State& state) {
  const hsu::SpatialGrid grid(state.range(0), state.range(0));
  const hsu::ShiftedLaplacianSolver solver(grid, hsu::Boundary::Reflexive);
  const hsu::Matrix b = gaussian(60, grid.pixels(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(b));
}
BENCHMARK(BM_ReflexiveLaplacianSolve)->Arg(10)->Arg(20);

}  // namespace
