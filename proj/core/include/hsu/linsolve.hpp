#pragma once

#include <memory>
#include <string>

#include "hsu/spatial_ops.hpp"
#include "hsu/types.hpp"

namespace hsu {

/// Cached Cholesky factor of a symmetric positive-definite matrix K.
/// Immutable once built; solve() is safe to call concurrently.
class SpdFactorization {
 public:
  /// Throws NotPositiveDefinite if the factorisation fails (NaN input etc).
  SpdFactorization(Matrix k, std::string tag);

  /// X with K X = B.
  Matrix solve(const Matrix& b) const;
  /// Same as solve, writing into x (resized if needed, must not alias b).
  void solve_into(const Matrix& b, Matrix& x) const;

  const Matrix& matrix() const noexcept { return k_; }
  const std::string& tag() const noexcept { return tag_; }
  Index dimension() const noexcept { return k_.rows(); }

 private:
  Matrix k_;
  Eigen::LLT<Matrix> llt_;
  Matrix inverse_;  // K^-1 from the factor; applying it is a single GEMM
  std::string tag_;
};

/// I + sigma A A^T (L x L).
SpdFactorization factor_dual_gram(const SpectralLibrary& a, double sigma);

/// A^T A + 3 I (m x m).
SpdFactorization factor_primal_gram(const SpectralLibrary& a);

Matrix solve_factored(const SpdFactorization& f, const Matrix& b);

/// Eigenvalues of I + H^T H under periodic boundaries, one per 2D spatial
/// frequency (k1, k2), stored at flat position k2 * n_r + k1.
struct FreqKernel {
  SpatialGrid grid;
  Vector eigenvalues;
};

FreqKernel build_freq_kernel(const SpatialGrid& grid);

/// Dense n x n matrix I + D^T D for the stacked difference operator D of the
/// given boundary, assembled from neighbour pairs.
Matrix shifted_laplacian_matrix(const SpatialGrid& grid, Boundary boundary);

inline constexpr Index kDefaultDenseCap = 4096;

/// Solves X (I + D^T D) = B band by band, i.e. (I + D^T D) x = b for every
/// row of B. Periodic grids go through the 2D DFT diagonalisation; reflexive
/// grids use a dense Cholesky factor (throws GridTooLargeForDense when
/// n > dense_cap). Construct once, solve many times.
class ShiftedLaplacianSolver {
 public:
  ShiftedLaplacianSolver(const SpatialGrid& grid, Boundary boundary,
                         Index dense_cap = kDefaultDenseCap);
  ~ShiftedLaplacianSolver();
  ShiftedLaplacianSolver(ShiftedLaplacianSolver&&) noexcept;
  ShiftedLaplacianSolver& operator=(ShiftedLaplacianSolver&&) noexcept;

  /// `imag_residue`, when given, receives the largest imaginary part left
  /// after the inverse transform (always 0 on the dense path).
  Matrix solve(const Matrix& b, double* imag_residue = nullptr) const;

  const SpatialGrid& grid() const noexcept;
  Boundary boundary() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Matrix solve_shifted_laplacian(const Matrix& b, const SpatialGrid& grid, Boundary boundary,
                               Index dense_cap = kDefaultDenseCap);

inline constexpr Index kMaxDiagnosticBands = 2048;

/// Smallest eigenvalue of
///   S = (I/sigma + A A^T) - A [I + A^T (I/sigma + A A^T)^{-1} A]^{-1} A^T,
/// whose positivity is the convergence precondition of the dual solver.
/// Throws TooLarge when L > kMaxDiagnosticBands.
double check_S_posdef(const SpectralLibrary& a, double sigma);

}  // namespace hsu
