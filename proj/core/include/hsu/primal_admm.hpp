#pragma once

#include <memory>

#include "hsu/linsolve.hpp"
#include "hsu/solver.hpp"
#include "hsu/types.hpp"

namespace hsu {

/// Variables of the split problem
///   min 1/2||D1 - Y||^2 + lambda||D2||_{rho,1} + lambda_tv||D4||_1 + indicator(D5 >= 0)
///   s.t. D1 = A Dt, D2 = Dt, D3 = Dt, D4 = H D3, D5 = Dt
/// with blocks M = (D1, D2, D3, D5), N = (Dt, D4) and one multiplier per
/// constraint. D4 (and Lambda4) take the shape of the stacked difference
/// operator: 2m x n for Periodic, m x (2n - n_r - n_c) for Reflexive.
struct PrimalState {
  Matrix d_tilde;  // m x n
  Matrix d1;       // L x n
  Matrix d2;       // m x n
  Matrix d3;       // m x n
  Matrix d4;
  Matrix d5;  // m x n
  Matrix lambda1, lambda2, lambda3, lambda4, lambda5;
  int iter = 0;

  static PrimalState zeros(Index bands, Index signatures, const SpatialGrid& grid,
                           Boundary boundary);
};

struct PrimalResiduals {
  double r_p1 = 0.0;
  double r_d1 = 0.0;
  double error1 = 0.0;
};

/// R_P1 = (||D1-A Dt|| + ||D2-Dt|| + ||D3-Dt|| + ||D4-H D3|| + ||D5-Dt||) / (1+||A||)
/// R_D1 = (||A^T L1 + L2 + L3 + L5|| + ||L3 + H^T L4||) / (1+||A||)
/// Error1 = ||Dt - Dt_prev|| / ||Dt||   (0 when both vanish)
PrimalResiduals primal_kkt_residuals(const PrimalState& state, const Matrix& d_tilde_prev,
                                     const SpectralLibrary& a, const SpatialGrid& grid,
                                     Boundary boundary);

/// Two-block primal ADMM. The block updates are public so each subproblem
/// can be checked in isolation; step() runs one full iteration.
class PrimalAdmm {
 public:
  /// Throws ConfigError, DimensionMismatch.
  PrimalAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg);
  PrimalAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg,
             PrimalState initial);

  /// D1, D2, D3, D5 given (Dt, D4) and the multipliers.
  void update_m();
  /// Dt, D4 given the new M blocks.
  void update_n();
  /// Lambda_j -= tau sigma (constraint residual j).
  void update_multipliers();
  void step();

  /// Iterates to a stopping condition.
  UnmixReport run();

  const PrimalState& state() const noexcept { return state_; }
  const SolverConfig& config() const noexcept { return cfg_; }
  const SpatialGrid& grid() const noexcept { return grid_; }
  DiffOp difference_op() const noexcept { return op_; }

 private:
  Matrix y_;
  SpectralLibrary library_;
  SpatialGrid grid_;
  SolverConfig cfg_;
  DiffOp op_;
  SpdFactorization gram_;
  ShiftedLaplacianSolver laplacian_;
  PrimalState state_;
};

UnmixReport primal_admm(const HyperCube& y, const SpectralLibrary& a, const SolverConfig& cfg);

}  // namespace hsu
