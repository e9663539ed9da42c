#include <chrono>
#include <string>

#include "hsu/objective.hpp"
#include "hsu/primal_admm.hpp"
#include "hsu/prox.hpp"

namespace hsu {

PrimalState PrimalState::zeros(Index bands, Index signatures, const SpatialGrid& grid,
                               Boundary boundary) {
  const Index n = grid.pixels();
  const auto [d4_rows, d4_cols] = diff_output_shape(stacked_op(boundary), signatures, grid);
  PrimalState s;
  s.d_tilde = Matrix::Zero(signatures, n);
  s.d1 = Matrix::Zero(bands, n);
  s.d2 = Matrix::Zero(signatures, n);
  s.d3 = Matrix::Zero(signatures, n);
  s.d4 = Matrix::Zero(d4_rows, d4_cols);
  s.d5 = Matrix::Zero(signatures, n);
  s.lambda1 = s.d1;
  s.lambda2 = s.d2;
  s.lambda3 = s.d3;
  s.lambda4 = s.d4;
  s.lambda5 = s.d5;
  return s;
}

PrimalResiduals primal_kkt_residuals(const PrimalState& s, const Matrix& d_tilde_prev,
                                     const SpectralLibrary& a, const SpatialGrid& grid,
                                     Boundary boundary) {
  const Matrix& am = a.matrix();
  const DiffOp op = stacked_op(boundary);
  const double scale = 1.0 + am.norm();
  PrimalResiduals r;
  r.r_p1 = ((s.d1 - am * s.d_tilde).norm() + (s.d2 - s.d_tilde).norm() +
            (s.d3 - s.d_tilde).norm() + (s.d4 - apply_diff(op, s.d3, grid)).norm() +
            (s.d5 - s.d_tilde).norm()) /
           scale;
  r.r_d1 = ((am.transpose() * s.lambda1 + s.lambda2 + s.lambda3 + s.lambda5).norm() +
            (s.lambda3 + apply_diff_adjoint(op, s.lambda4, grid)).norm()) /
           scale;
  r.error1 = relative_change(s.d_tilde, d_tilde_prev);
  return r;
}

namespace {

void require_shape(const Matrix& m, Index rows, Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

const SolverConfig& validated(const SolverConfig& cfg) {
  cfg.validate();
  return cfg;
}

const HyperCube& matching(const HyperCube& y, const SpectralLibrary& a) {
  if (y.bands() != a.bands()) {
    throw Error(ErrorCode::DimensionMismatch, "cube has " + std::to_string(y.bands()) +
                                                  " bands, library has " +
                                                  std::to_string(a.bands()));
  }
  return y;
}

}  // namespace

PrimalAdmm::PrimalAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg)
    : PrimalAdmm(y, a, cfg,
                 PrimalState::zeros(a.bands(), a.signatures(), y.grid(), cfg.boundary)) {}

PrimalAdmm::PrimalAdmm(const HyperCube& y, const SpectralLibrary& a, SolverConfig cfg,
                       PrimalState initial)
    : y_(matching(y, a).data()),
      library_(a),
      grid_(y.grid()),
      cfg_(validated(cfg)),
      op_(stacked_op(cfg.boundary)),
      gram_(factor_primal_gram(a)),
      laplacian_(y.grid(), cfg.boundary),
      state_(std::move(initial)) {
  const Index l = a.bands();
  const Index m = a.signatures();
  const Index n = grid_.pixels();
  const auto [d4_rows, d4_cols] = diff_output_shape(op_, m, grid_);
  require_shape(state_.d_tilde, m, n, "D~");
  require_shape(state_.d1, l, n, "D1");
  require_shape(state_.d2, m, n, "D2");
  require_shape(state_.d3, m, n, "D3");
  require_shape(state_.d4, d4_rows, d4_cols, "D4");
  require_shape(state_.d5, m, n, "D5");
  require_shape(state_.lambda1, l, n, "Lambda1");
  require_shape(state_.lambda2, m, n, "Lambda2");
  require_shape(state_.lambda3, m, n, "Lambda3");
  require_shape(state_.lambda4, d4_rows, d4_cols, "Lambda4");
  require_shape(state_.lambda5, m, n, "Lambda5");
}

void PrimalAdmm::update_m() {
  const double sigma = cfg_.sigma;
  const Matrix& a = library_.matrix();
  PrimalState& s = state_;
  // argmin 1/2||D1 - Y||^2 + sigma/2||A D~ - D1 - Lambda1/sigma||^2
  s.d1 = (y_ + sigma * (a * s.d_tilde) - s.lambda1) / (1.0 + sigma);
  const Matrix d2_arg = s.d_tilde - s.lambda2 / sigma;
  s.d2 = cfg_.rho == Rho::L1 ? soft_threshold(d2_arg, cfg_.lambda / sigma)
                             : group_shrink_rows(d2_arg, cfg_.lambda / sigma);
  // (I + H^T H) D3 = D~ - Lambda3/sigma + H^T (D4 - Lambda4/sigma)
  s.d3 = laplacian_.solve(s.d_tilde - s.lambda3 / sigma +
                          apply_diff_adjoint(op_, s.d4 - s.lambda4 / sigma, grid_));
  s.d5 = project_nonnegative(s.d_tilde - s.lambda5 / sigma);
}

void PrimalAdmm::update_n() {
  const double sigma = cfg_.sigma;
  const Matrix& a = library_.matrix();
  PrimalState& s = state_;
  // (A^T A + 3 I) D~ = A^T (D1 + L1/s) + (D2 + L2/s) + (D3 + L3/s) + (D5 + L5/s)
  s.d_tilde = gram_.solve(a.transpose() * (s.d1 + s.lambda1 / sigma) + s.d2 + s.d3 + s.d5 +
                          (s.lambda2 + s.lambda3 + s.lambda5) / sigma);
  s.d4 = soft_threshold(apply_diff(op_, s.d3, grid_) + s.lambda4 / sigma, cfg_.lambda_tv / sigma);
}

void PrimalAdmm::update_multipliers() {
  const double step = cfg_.tau * cfg_.sigma;
  const Matrix& a = library_.matrix();
  PrimalState& s = state_;
  s.lambda1 -= step * (a * s.d_tilde - s.d1);
  s.lambda2 -= step * (s.d_tilde - s.d2);
  s.lambda3 -= step * (s.d_tilde - s.d3);
  s.lambda4 -= step * (s.d4 - apply_diff(op_, s.d3, grid_));
  s.lambda5 -= step * (s.d_tilde - s.d5);
}

void PrimalAdmm::step() {
  update_m();
  update_n();
  update_multipliers();
  ++state_.iter;
}

UnmixReport PrimalAdmm::run() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::vector<IterationRecord> trace;
  trace.reserve(static_cast<std::size_t>(cfg_.max_iter));
  Termination termination = Termination::MaxIter;
  Matrix prev;
  for (int k = 0; k < cfg_.max_iter; ++k) {
    prev = state_.d_tilde;
    step();
    const PrimalResiduals r = primal_kkt_residuals(state_, prev, library_, grid_, cfg_.boundary);
    IterationRecord rec;
    rec.iter = state_.iter;
    rec.r_primal = r.r_p1;
    rec.r_dual = r.r_d1;
    rec.error = r.error1;
    const bool finite = state_.d_tilde.allFinite();
    rec.objective = finite ? objective(project_nonnegative(state_.d_tilde), y_, library_.matrix(),
                                       cfg_.lambda, cfg_.lambda_tv, cfg_.rho, cfg_.boundary, grid_)
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
  Matrix x = state_.d_tilde;
  if (!x.allFinite()) x.setZero();  // keep the report valid; termination says Diverged
  AbundanceMap x_hat(x, grid_);
  AbundanceMap x_nonneg(project_nonnegative(x), grid_);
  const int iterations = static_cast<int>(trace.size());
  return UnmixReport{std::move(x_hat), std::move(x_nonneg), std::move(trace), termination,
                     iterations,       seconds,            0.0};
}

UnmixReport primal_admm(const HyperCube& y, const SpectralLibrary& a, const SolverConfig& cfg) {
  return PrimalAdmm(y, a, cfg).run();
}

}  // namespace hsu
