#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "fftw_lock.hpp"
#include "hsu/linsolve.hpp"
#include "hsu/spatial_ops.hpp"

namespace hsu {

SpdFactorization::SpdFactorization(Matrix k, std::string tag)
    : k_(std::move(k)), llt_(k_), tag_(std::move(tag)) {
  if (k_.rows() != k_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, tag_ + " is not square");
  }
  if (!k_.allFinite() || llt_.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, tag_);
  }
  inverse_ = llt_.solve(Matrix::Identity(k_.rows(), k_.cols()));
  inverse_ = 0.5 * (inverse_ + inverse_.transpose()).eval();
}

Matrix SpdFactorization::solve(const Matrix& b) const {
  Matrix x;
  solve_into(b, x);
  return x;
}

void SpdFactorization::solve_into(const Matrix& b, Matrix& x) const {
  if (b.rows() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, tag_ + ": right-hand side has " +
                                                  std::to_string(b.rows()) + " rows, expected " +
                                                  std::to_string(dimension()));
  }
  x.resize(b.rows(), b.cols());
  x.noalias() = inverse_ * b;
}

SpdFactorization factor_dual_gram(const SpectralLibrary& a, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("sigma", "must be positive");
  const Matrix& am = a.matrix();
  Matrix k = Matrix::Identity(am.rows(), am.rows());
  k.selfadjointView<Eigen::Lower>().rankUpdate(am, sigma);
  k.triangularView<Eigen::StrictlyUpper>() = k.transpose();
  return {std::move(k), "I + sigma A A^T"};
}

SpdFactorization factor_primal_gram(const SpectralLibrary& a) {
  const Matrix& am = a.matrix();
  Matrix k = 3.0 * Matrix::Identity(am.cols(), am.cols());
  k.selfadjointView<Eigen::Lower>().rankUpdate(am.transpose(), 1.0);
  k.triangularView<Eigen::StrictlyUpper>() = k.transpose();
  return {std::move(k), "A^T A + 3 I"};
}

Matrix solve_factored(const SpdFactorization& f, const Matrix& b) { return f.solve(b); }

FreqKernel build_freq_kernel(const SpatialGrid& grid) {
  const Index n_r = grid.rows();
  const Index n_c = grid.cols();
  auto term = [](Index k, Index len) {
    // |1 - exp(-2 pi i k / len)|^2
    return 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                static_cast<double>(len));
  };
  Vector eig(grid.pixels());
  for (Index k2 = 0; k2 < n_c; ++k2) {
    for (Index k1 = 0; k1 < n_r; ++k1) {
      eig(grid.flat(k1, k2)) = 1.0 + term(k1, n_r) + term(k2, n_c);
    }
  }
  return {grid, std::move(eig)};
}

Matrix shifted_laplacian_matrix(const SpatialGrid& grid, Boundary boundary) {
  const Index n = grid.pixels();
  Matrix k = Matrix::Identity(n, n);
  auto edge = [&k](Index i, Index j) {
    k(i, i) += 1.0;
    k(j, j) += 1.0;
    k(i, j) -= 1.0;
    k(j, i) -= 1.0;
  };
  const Index n_r = grid.rows();
  const Index n_c = grid.cols();
  for (Index c = 0; c < n_c; ++c) {
    for (Index r = 0; r < n_r; ++r) {
      const Index i = grid.flat(r, c);
      if (boundary == Boundary::Periodic) {
        edge(i, grid.flat(r, (c + 1) % n_c));
        edge(i, grid.flat((r + 1) % n_r, c));
      } else {
        if (c + 1 < n_c) edge(i, grid.flat(r, c + 1));
        if (r + 1 < n_r) edge(i, grid.flat(r + 1, c));
      }
    }
  }
  return k;
}

// FFTW's planner is not reentrant; execution of finished plans is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct ShiftedLaplacianSolver::Impl {
  SpatialGrid grid;
  Boundary boundary;
  // Periodic path.
  Vector eigenvalues;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  // Reflexive path.
  std::unique_ptr<SpdFactorization> dense;

  Impl(const SpatialGrid& g, Boundary b) : grid(g), boundary(b) {}
  ~Impl() {
    const std::lock_guard lock(fftw_planner_mutex());
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
  }
};

namespace {

struct FftwBuffer {
  explicit FftwBuffer(Index n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) *
                                                    static_cast<std::size_t>(n)))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

}  // namespace

ShiftedLaplacianSolver::ShiftedLaplacianSolver(const SpatialGrid& grid, Boundary boundary,
                                               Index dense_cap)
    : impl_(std::make_unique<Impl>(grid, boundary)) {
  if (boundary == Boundary::Periodic) {
    impl_->eigenvalues = build_freq_kernel(grid).eigenvalues;
    // A column-major n_r x n_c image is a row-major n_c x n_r array.
    FftwBuffer in(grid.pixels()), out(grid.pixels());
    const int n0 = static_cast<int>(grid.cols());
    const int n1 = static_cast<int>(grid.rows());
    const std::lock_guard lock(fftw_planner_mutex());
    impl_->forward = fftw_plan_dft_2d(n0, n1, in.data, out.data, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->backward = fftw_plan_dft_2d(n0, n1, in.data, out.data, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (impl_->forward == nullptr || impl_->backward == nullptr) {
      throw Error(ErrorCode::TooLarge, "could not plan a " + std::to_string(n0) + "x" +
                                           std::to_string(n1) + " transform");
    }
  } else {
    if (grid.pixels() > dense_cap) {
      throw Error(ErrorCode::GridTooLargeForDense,
                  std::to_string(grid.pixels()) + " pixels exceeds the dense cap of " +
                      std::to_string(dense_cap));
    }
    impl_->dense = std::make_unique<SpdFactorization>(
        shifted_laplacian_matrix(grid, boundary), "I + D^T D (reflexive)");
  }
}

ShiftedLaplacianSolver::~ShiftedLaplacianSolver() = default;
ShiftedLaplacianSolver::ShiftedLaplacianSolver(ShiftedLaplacianSolver&&) noexcept = default;
ShiftedLaplacianSolver& ShiftedLaplacianSolver::operator=(ShiftedLaplacianSolver&&) noexcept =
    default;

const SpatialGrid& ShiftedLaplacianSolver::grid() const noexcept { return impl_->grid; }
Boundary ShiftedLaplacianSolver::boundary() const noexcept { return impl_->boundary; }

Matrix ShiftedLaplacianSolver::solve(const Matrix& b, double* imag_residue) const {
  const Index n = impl_->grid.pixels();
  if (b.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(b.cols()) +
                                                  " columns, grid has " + std::to_string(n));
  }
  if (imag_residue != nullptr) *imag_residue = 0.0;
  if (impl_->dense) {
    // Rows of B are independent right-hand sides of the symmetric system.
    return impl_->dense->solve(b.transpose()).transpose();
  }

  Matrix x(b.rows(), n);
  FftwBuffer in(n), out(n);
  const double scale = 1.0 / static_cast<double>(n);
  double worst_imag = 0.0;
  for (Index band = 0; band < b.rows(); ++band) {
    for (Index p = 0; p < n; ++p) {
      in.data[p][0] = b(band, p);
      in.data[p][1] = 0.0;
    }
    fftw_execute_dft(impl_->forward, in.data, out.data);
    for (Index p = 0; p < n; ++p) {
      const double d = impl_->eigenvalues(p);
      out.data[p][0] /= d;
      out.data[p][1] /= d;
    }
    fftw_execute_dft(impl_->backward, out.data, in.data);
    for (Index p = 0; p < n; ++p) {
      x(band, p) = in.data[p][0] * scale;
      worst_imag = std::max(worst_imag, std::abs(in.data[p][1] * scale));
    }
  }
  if (imag_residue != nullptr) *imag_residue = worst_imag;
  return x;
}

Matrix solve_shifted_laplacian(const Matrix& b, const SpatialGrid& grid, Boundary boundary,
                               Index dense_cap) {
  return ShiftedLaplacianSolver(grid, boundary, dense_cap).solve(b);
}

double check_S_posdef(const SpectralLibrary& a, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("sigma", "must be positive");
  const Matrix& am = a.matrix();
  const Index l = am.rows();
  if (l > kMaxDiagnosticBands) {
    throw Error(ErrorCode::TooLarge, std::to_string(l) + " bands exceeds the diagnostic cap of " +
                                         std::to_string(kMaxDiagnosticBands));
  }
  const Matrix outer = Matrix::Identity(l, l) / sigma + am * am.transpose();
  const Eigen::LLT<Matrix> outer_llt(outer);
  const Matrix inner =
      Matrix::Identity(am.cols(), am.cols()) + am.transpose() * outer_llt.solve(am);
  const Eigen::LLT<Matrix> inner_llt(inner);
  if (outer_llt.info() != Eigen::Success || inner_llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "S diagnostic");
  }
  Matrix s = outer - am * inner_llt.solve(am.transpose());
  s = 0.5 * (s + s.transpose()).eval();
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

}  // namespace hsu
