#include <benchmark/benchmark.h>

#include "hsu/datagen.hpp"
#include "hsu/dual_sgs_admm.hpp"
#include "hsu/primal_admm.hpp"

namespace {

struct Problem {
  hsu::SpectralLibrary a;
  hsu::HyperCube y;
};

Problem make_problem(hsu::Index n_r, hsu::Index n_c) {
  const hsu::SpatialGrid grid(n_r, n_c);
  hsu::SpectralLibrary a = hsu::gen_library(50, 60, 0.9, 11);
  const hsu::Dc1Abundances truth = hsu::gen_abundances_dc1(grid, a, 5, 12);
  const hsu::HyperCube clean(a.matrix() * truth.x_true.data(), grid);
  hsu::HyperCube y = hsu::add_noise(clean, hsu::NoiseSpec{hsu::NoiseKind::White, 30.0, {}, 13});
  return {std::move(a), std::move(y)};
}

void BM_DualStep(benchmark::State& state) {
  const Problem p = make_problem(20, state.range(0));
  hsu::SolverConfig cfg = hsu::SolverConfig::dual_defaults();
  cfg.lambda = 5e-3;
  cfg.lambda_tv = 1e-3;
  hsu::DualSgsAdmm solver(p.y, p.a, cfg);
  for (auto _ : state) solver.step();
}
BENCHMARK(BM_DualStep)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_PrimalStep(benchmark::State& state) {
  const Problem p = make_problem(20, state.range(0));
  hsu::SolverConfig cfg = hsu::SolverConfig::primal_defaults();
  cfg.lambda = 5e-3;
  cfg.lambda_tv = 1e-3;
  hsu::PrimalAdmm solver(p.y, p.a, cfg);
  for (auto _ : state) solver.step();
}
BENCHMARK(BM_PrimalStep)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_DualSolveDefaults(benchmark::State& state) {
  const Problem p = make_problem(20, 20);
  hsu::SolverConfig cfg = hsu::SolverConfig::dual_defaults();
  cfg.lambda = 5e-3;
  cfg.lambda_tv = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(hsu::dual_sgs_admm(p.y, p.a, cfg));
}
BENCHMARK(BM_DualSolveDefaults)->Unit(benchmark::kMillisecond);

}  // namespace
