#include "hsu/sweep.hpp"
#include "hsu/dual_sgs_admm.hpp"
#include "hsu/metrics.hpp"
#include "hsu/parallel.hpp"
#include "hsu/primal_admm.hpp"

namespace hsu {

const std::vector<double>& default_parameter_grid() {
  static const std::vector<double> grid = {0.5,   0.1,    0.05,   0.01,   0.005,
                                           0.001, 0.0005, 0.0001, 0.00005, 0.00001};
  return grid;
}

UnmixReport run_solver(SolverKind solver, const HyperCube& y, const SpectralLibrary& a,
                       const SolverConfig& cfg) {
  return solver == SolverKind::Primal ? primal_admm(y, a, cfg) : dual_sgs_admm(y, a, cfg);
}

std::vector<SweepPoint> run_sweep(const HyperCube& y, const SpectralLibrary& a,
                                  const Matrix& x_true, SolverKind solver,
                                  const SolverConfig& base, const std::vector<double>& lambdas,
                                  const std::vector<double>& lambda_tvs, unsigned threads) {
  if (x_true.rows() != a.signatures() || x_true.cols() != y.pixels()) {
    throw Error(ErrorCode::DimensionMismatch, "X_true does not match library and cube");
  }
  base.validate();
  const Index count = static_cast<Index>(lambdas.size() * lambda_tvs.size());
  std::vector<SweepPoint> points(static_cast<std::size_t>(count));
  const std::size_t per_lambda = lambda_tvs.size();
  parallel_for(
      count,
      [&](Index begin, Index end) {
        for (Index k = begin; k < end; ++k) {
          const auto idx = static_cast<std::size_t>(k);
          SolverConfig cfg = base;
          cfg.lambda = lambdas[idx / per_lambda];
          cfg.lambda_tv = lambda_tvs[idx % per_lambda];
          const UnmixReport report = run_solver(solver, y, a, cfg);
          SweepPoint& p = points[idx];
          p.lambda = cfg.lambda;
          p.lambda_tv = cfg.lambda_tv;
          p.sre_db = sre_db(x_true, report.x_nonneg.data());
          p.iterations = report.iterations;
          p.termination = report.termination;
        }
      },
      std::max(1U, threads));
  return points;
}

const SweepPoint& best_point(const std::vector<SweepPoint>& points) {
  if (points.empty()) throw Error(ErrorCode::OutOfRange, "empty sweep");
  const SweepPoint* best = &points.front();
  for (const SweepPoint& p : points) {
    if (p.sre_db > best->sre_db) best = &p;
  }
  return *best;
}

}  // namespace hsu
