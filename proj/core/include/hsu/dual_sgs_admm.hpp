#pragma once

#include "hsu/linsolve.hpp"
#include "hsu/prox.hpp"
#include "hsu/solver.hpp"
#include "hsu/types.hpp"

namespace hsu {

/// Iterate of the symmetric Gauss-Seidel ADMM on the dual problem
///   min p*(-V1) + q*(-V2) + 1/2||V3||^2 - <V3, Y>  s.t.  -V1 - V2 - A^T V3 = 0
/// where X is the multiplier of the linear constraint (the abundances).
struct DualState {
  Matrix v1;  // m x n
  Matrix v2;  // m x n
  Matrix v3;  // L x n
  Matrix x;   // m x n
  int iter = 0;
  double delta_hat_norm = 0.0;
  double delta_norm = 0.0;

  static DualState zeros(Index bands, Index signatures, Index pixels);
};

struct DualResiduals {
  double r_p2 = 0.0;
  double r_d2 = 0.0;
  double error2 = 0.0;
};

/// R_P2 = ||A X - Y - U3|| / (1+||Y||) with the primal slack U3 = -V3,
/// R_D2 = ||V1 + V2 + A^T V3|| / (1+||A||),
/// Error2 = ||X - X_prev|| / ||X||   (0 when both vanish).
DualResiduals dual_kkt_residuals(const DualState& state, const Matrix& x_prev,
                                 const SpectralLibrary& a, const HyperCube& y);

class DualSgsAdmm {
 public:
  /// Throws ConfigError, DimensionMismatch. cfg.boundary is ignored: the dual
  /// splitting works with the reflexive operators.
  DualSgsAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg);
  DualSgsAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg,
              DualState initial);

  /// One sweep V3^, V1, V3, V2 followed by the X update. Throws InexactSolve
  /// if a linear solve leaves a gradient residual above cfg.inexact_tol.
  void step();
  UnmixReport run();

  const DualState& state() const noexcept { return state_; }
  const SolverConfig& config() const noexcept { return cfg_; }
  const SpdFactorization& gram() const noexcept { return gram_; }
  /// Largest ||delta|| / (1 + ||rhs||) seen so far.
  double max_inexact_ratio() const noexcept { return max_inexact_ratio_; }

 private:
  // Solves (I + sigma A A^T) V3 = Y - A(sigma V1 + sigma V2 + X); returns ||delta||.
  double solve_v3(const Matrix& v1, const Matrix& v2, Matrix& v3);
  // dual_kkt_residuals reusing the A^T V3 product of the last sweep.
  DualResiduals residuals(const Matrix& x_prev);

  Matrix y_;
  Matrix a_;
  SpatialGrid grid_;
  SolverConfig cfg_;
  ProxSpec spec_;
  SpdFactorization gram_;
  DualState state_;
  double max_inexact_ratio_ = 0.0;
  double y_norm_ = 0.0;
  double a_norm_ = 0.0;

  // Workspace reused across sweeps.
  Matrix w_;
  Matrix rhs_;
  Matrix grad_;
  Matrix v3_hat_;
  Matrix c_;
  Matrix at_v3_;
  Matrix x_over_sigma_;
};

UnmixReport dual_sgs_admm(const HyperCube& y, const SpectralLibrary& a, const SolverConfig& cfg);

}  // namespace hsu
