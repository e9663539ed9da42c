#include <cmath>
#include <limits>

#include "hsu/solver.hpp"

namespace hsu {

SolverConfig SolverConfig::primal_defaults() {
  SolverConfig cfg;
  cfg.max_iter = 200;
  cfg.boundary = Boundary::Periodic;
  return cfg;
}

SolverConfig SolverConfig::dual_defaults() {
  SolverConfig cfg;
  cfg.max_iter = 50;
  cfg.boundary = Boundary::Reflexive;
  return cfg;
}

void SolverConfig::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!finite_nonneg(lambda)) throw ConfigError("lambda", "must be a finite value >= 0");
  if (!finite_nonneg(lambda_tv)) throw ConfigError("lambda_tv", "must be a finite value >= 0");
  if (!finite_pos(sigma)) throw ConfigError("sigma", "must be a finite value > 0");
  if (!(tau > 0.0 && tau < kGoldenRatio)) {
    throw ConfigError("tau", "must lie strictly inside (0, (1 + sqrt 5) / 2)");
  }
  if (!finite_pos(tol1)) throw ConfigError("tol1", "must be > 0");
  if (!finite_pos(tol2)) throw ConfigError("tol2", "must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter", "must be >= 1");
  if (!finite_nonneg(inexact_tol)) throw ConfigError("inexact_tol", "must be >= 0");
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::KktTol: return "kkt_tol";
    case Termination::ChangeTol: return "change_tol";
    case Termination::MaxIter: return "max_iter";
    case Termination::Diverged: return "diverged";
  }
  return "unknown";
}

std::optional<Termination> check_termination(const IterationRecord& rec, const SolverConfig& cfg) {
  if (!std::isfinite(rec.r_primal) || !std::isfinite(rec.r_dual) || std::isnan(rec.error)) {
    return Termination::Diverged;
  }
  if (rec.r_primal < cfg.tol1 && rec.r_dual < cfg.tol1) return Termination::KktTol;
  if (rec.error < cfg.tol2) return Termination::ChangeTol;
  return std::nullopt;
}

double relative_change(const Matrix& next, const Matrix& prev) {
  const double denom = next.norm();
  const double num = (next - prev).norm();
  if (denom == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / denom;
}

}  // namespace hsu
