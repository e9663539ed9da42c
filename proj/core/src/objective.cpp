#include <cmath>
#include <limits>

#include "hsu/objective.hpp"

namespace hsu {

double sparsity_norm(const Matrix& x, Rho rho) {
  return rho == Rho::L1 ? x.cwiseAbs().sum() : x.rowwise().norm().sum();
}

double objective(const Matrix& x, const Matrix& y, const Matrix& a, double lambda,
                 double lambda_tv, Rho rho, Boundary boundary, const SpatialGrid& grid) {
  if (a.cols() != x.rows() || a.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "objective operands do not conform");
  }
  if (x.size() > 0 && x.minCoeff() < -kFeasibilitySlack) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix xp = x.cwiseMax(0.0);
  const double fit = 0.5 * (a * xp - y).squaredNorm();
  double tv = 0.0;
  if (lambda_tv != 0.0) tv = apply_diff(stacked_op(boundary), xp, grid).cwiseAbs().sum();
  return fit + lambda * sparsity_norm(xp, rho) + lambda_tv * tv;
}

double objective(const AbundanceMap& x, const HyperCube& y, const SpectralLibrary& a,
                 double lambda, double lambda_tv, Rho rho, Boundary boundary) {
  if (!(x.grid() == y.grid())) {
    throw Error(ErrorCode::DimensionMismatch, "abundance map and cube grids differ");
  }
  return objective(x.data(), y.data(), a.matrix(), lambda, lambda_tv, rho, boundary, y.grid());
}

}  // namespace hsu
