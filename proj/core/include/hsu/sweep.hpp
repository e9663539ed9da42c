#pragma once

#include <vector>

#include "hsu/io.hpp"
#include "hsu/solver.hpp"
#include "hsu/types.hpp"

namespace hsu {

/// {0.5, 0.1, 0.05, ..., 0.00001}: candidate values for both lambda and lambda_tv.
const std::vector<double>& default_parameter_grid();

struct SweepPoint {
  double lambda = 0.0;
  double lambda_tv = 0.0;
  double sre_db = 0.0;
  int iterations = 0;
  Termination termination = Termination::MaxIter;
};

/// Runs the solver for every (lambda, lambda_tv) pair (lambda-major order)
/// and scores the nonnegative estimate against x_true. `threads` > 1 fans the
/// independent runs out; result order does not depend on it.
std::vector<SweepPoint> run_sweep(const HyperCube& y, const SpectralLibrary& a,
                                  const Matrix& x_true, SolverKind solver,
                                  const SolverConfig& base, const std::vector<double>& lambdas,
                                  const std::vector<double>& lambda_tvs, unsigned threads = 1);

/// Highest SRE; the first such point on ties.
const SweepPoint& best_point(const std::vector<SweepPoint>& points);

UnmixReport run_solver(SolverKind solver, const HyperCube& y, const SpectralLibrary& a,
                       const SolverConfig& cfg);

}  // namespace hsu
