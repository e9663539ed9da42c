#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "hsu/dual_sgs_admm.hpp"
#include "hsu/objective.hpp"

namespace hsu {

DualState DualState::zeros(Index bands, Index signatures, Index pixels) {
  DualState s;
  s.v1 = Matrix::Zero(signatures, pixels);
  s.v2 = Matrix::Zero(signatures, pixels);
  s.v3 = Matrix::Zero(bands, pixels);
  s.x = Matrix::Zero(signatures, pixels);
  return s;
}

DualResiduals dual_kkt_residuals(const DualState& s, const Matrix& x_prev,
                                 const SpectralLibrary& a, const HyperCube& y) {
  const Matrix& am = a.matrix();
  const Matrix& ym = y.data();
  DualResiduals r;
  r.r_p2 = (am * s.x - ym + s.v3).norm() / (1.0 + ym.norm());
  r.r_d2 = (s.v1 + s.v2 + am.transpose() * s.v3).norm() / (1.0 + am.norm());
  r.error2 = relative_change(s.x, x_prev);
  return r;
}

namespace {

SolverConfig checked(SolverConfig cfg, const HyperCube& y, const SpectralLibrary& a) {
  cfg.validate();
  if (y.bands() != a.bands()) {
    throw Error(ErrorCode::DimensionMismatch, "cube has " + std::to_string(y.bands()) +
                                                  " bands, library has " +
                                                  std::to_string(a.bands()));
  }
  cfg.boundary = Boundary::Reflexive;
  return cfg;
}

void require_shape(const Matrix& m, Index rows, Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

}  // namespace

DualSgsAdmm::DualSgsAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg)
    : DualSgsAdmm(y, a, cfg, DualState::zeros(a.bands(), a.signatures(), y.pixels())) {}

DualSgsAdmm::DualSgsAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg,
                         DualState initial)
    : y_(y.data()),
      a_(a.matrix()),
      grid_(y.grid()),
      cfg_(checked(cfg, y, a)),
      spec_{cfg_.lambda, cfg_.lambda_tv, cfg_.rho, cfg_.sigma},
      gram_(factor_dual_gram(a, cfg_.sigma)),
      state_(std::move(initial)) {
  const Index l = a.bands();
  const Index m = a.signatures();
  const Index n = y.pixels();
  require_shape(state_.v1, m, n, "V1");
  require_shape(state_.v2, m, n, "V2");
  require_shape(state_.v3, l, n, "V3");
  require_shape(state_.x, m, n, "X");
  y_norm_ = y_.norm();
  a_norm_ = a_.norm();
}

double DualSgsAdmm::solve_v3(const Matrix& v1, const Matrix& v2, Matrix& v3) {
  const double sigma = cfg_.sigma;
  w_ = sigma * (v1 + v2) + state_.x;
  rhs_ = y_;
  rhs_.noalias() -= a_ * w_;
  gram_.solve_into(rhs_, v3);
  grad_ = -rhs_;
  grad_.noalias() += gram_.matrix() * v3;
  const double delta = grad_.norm();
  const double ratio = delta / (1.0 + rhs_.norm());
  if (!(ratio <= cfg_.inexact_tol)) {
    if (!std::isfinite(ratio)) return delta;
    throw Error(ErrorCode::InexactSolve, "V3 solve left gradient residual " +
                                             std::to_string(ratio) + " (relative) above " +
                                             std::to_string(cfg_.inexact_tol));
  }
  if (ratio > max_inexact_ratio_) max_inexact_ratio_ = ratio;
  return delta;
}

void DualSgsAdmm::step() {
  const double sigma = cfg_.sigma;
  DualState& s = state_;
  x_over_sigma_ = s.x / sigma;

  s.delta_hat_norm = solve_v3(s.v1, s.v2, v3_hat_);

  c_ = s.v2 + x_over_sigma_;
  c_.noalias() += a_.transpose() * v3_hat_;
  s.v1 = prox_p(sigma * c_, spec_, grid_) / sigma - c_;

  s.delta_norm = solve_v3(s.v1, s.v2, s.v3);
  at_v3_.resize(a_.cols(), s.v3.cols());
  at_v3_.noalias() = a_.transpose() * s.v3;

  c_ = s.v1 + at_v3_ + x_over_sigma_;
  s.v2 = prox_horizontal_tv(sigma * c_, sigma * cfg_.lambda_tv, grid_) / sigma - c_;

  s.x += cfg_.tau * sigma * (s.v1 + s.v2 + at_v3_);
  ++s.iter;
}

DualResiduals DualSgsAdmm::residuals(const Matrix& x_prev) {
  const DualState& s = state_;
  DualResiduals r;
  rhs_ = s.v3 - y_;
  rhs_.noalias() += a_ * s.x;
  r.r_p2 = rhs_.norm() / (1.0 + y_norm_);
  c_ = s.v1 + s.v2 + at_v3_;
  r.r_d2 = c_.norm() / (1.0 + a_norm_);
  r.error2 = relative_change(s.x, x_prev);
  return r;
}

UnmixReport DualSgsAdmm::run() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::vector<IterationRecord> trace;
  trace.reserve(static_cast<std::size_t>(cfg_.max_iter));
  Termination termination = Termination::MaxIter;
  Matrix prev;
  for (int k = 0; k < cfg_.max_iter; ++k) {
    prev = state_.x;
    step();
    const DualResiduals r = residuals(prev);
    IterationRecord rec;
    rec.iter = state_.iter;
    rec.r_primal = r.r_p2;
    rec.r_dual = r.r_d2;
    rec.error = r.error2;
    const bool finite = state_.x.allFinite();
    rec.objective = finite ? objective(project_nonnegative(state_.x), y_, a_, cfg_.lambda,
                                       cfg_.lambda_tv, cfg_.rho, Boundary::Reflexive, grid_)
                           : std::numeric_limits<double>::quiet_NaN();
    rec.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    trace.push_back(rec);
    const auto stop = finite ? check_termination(rec, cfg_) : Termination::Diverged;
    if (stop) {
      termination = *stop;
      break;
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  Matrix x = state_.x;
  if (!x.allFinite()) x.setZero();
  AbundanceMap x_hat(x, grid_);
  AbundanceMap x_nonneg(project_nonnegative(x), grid_);
  const int iterations = static_cast<int>(trace.size());
  return UnmixReport{std::move(x_hat), std::move(x_nonneg), std::move(trace), termination,
                     iterations,       seconds,            max_inexact_ratio_};
}

UnmixReport dual_sgs_admm(const HyperCube& y, const SpectralLibrary& a, const SolverConfig& cfg) {
  return DualSgsAdmm(y, a, cfg).run();
}

}  // namespace hsu
