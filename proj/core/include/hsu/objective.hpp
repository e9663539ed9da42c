#pragma once

#include "hsu/prox.hpp"
#include "hsu/spatial_ops.hpp"
#include "hsu/types.hpp"

namespace hsu {

inline constexpr double kFeasibilitySlack = 1e-12;

/// 1/2 ||A X - Y||_F^2 + lambda ||X||_{rho,1} + lambda_tv TV(X) + indicator(X >= 0)
///
/// TV is ||H^_v X||_1 + ||H^_h X||_1 for Reflexive and ||H X||_1 for
/// Periodic. Entries down to -kFeasibilitySlack are clamped to zero; anything
/// more negative returns +infinity.
double objective(const Matrix& x, const Matrix& y, const Matrix& a, double lambda,
                 double lambda_tv, Rho rho, Boundary boundary, const SpatialGrid& grid);

double objective(const AbundanceMap& x, const HyperCube& y, const SpectralLibrary& a,
                 double lambda, double lambda_tv, Rho rho, Boundary boundary);

/// ||X||_{rho,1}.
double sparsity_norm(const Matrix& x, Rho rho);

}  // namespace hsu
