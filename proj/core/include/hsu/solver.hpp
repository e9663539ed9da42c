#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hsu/prox.hpp"
#include "hsu/spatial_ops.hpp"
#include "hsu/types.hpp"

namespace hsu {

inline constexpr double kGoldenRatio = 1.6180339887498949;

struct SolverConfig {
  double lambda = 1e-3;
  double lambda_tv = 1e-3;
  Rho rho = Rho::L1;
  double sigma = 0.05;
  double tau = 1.0;
  double tol1 = 1e-3;  // relative KKT residual
  double tol2 = 1e-4;  // relative change of the abundance iterate
  int max_iter = 200;
  Boundary boundary = Boundary::Periodic;
  double inexact_tol = 1e-8;

  static SolverConfig primal_defaults();
  static SolverConfig dual_defaults();

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

enum class Termination { KktTol, ChangeTol, MaxIter, Diverged };

std::string_view to_string(Termination t) noexcept;

struct IterationRecord {
  int iter = 0;
  double r_primal = 0.0;
  double r_dual = 0.0;
  double error = 0.0;
  double objective = 0.0;
  double elapsed_seconds = 0.0;
};

struct UnmixReport {
  AbundanceMap x_hat;
  AbundanceMap x_nonneg;
  std::vector<IterationRecord> trace;
  Termination termination = Termination::MaxIter;
  int iterations = 0;
  double seconds = 0.0;
  // Largest ||delta|| / (1 + ||rhs||) over all inner linear solves (dual only).
  double max_inexact_ratio = 0.0;
};

/// Shared stopping rule: (R_P < tol1 and R_D < tol1) or Error < tol2.
/// Non-finite residuals report Diverged; nullopt means keep iterating.
std::optional<Termination> check_termination(const IterationRecord& rec, const SolverConfig& cfg);

/// ||next - prev||_F / ||next||_F, with 0 when both are zero.
double relative_change(const Matrix& next, const Matrix& prev);

}  // namespace hsu
