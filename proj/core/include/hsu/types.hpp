#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "hsu/error.hpp"

namespace hsu {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Pixel lattice of an image cube. Pixels are stored column-major: pixel
/// (r, c), 1-based, lives at flat position (c - 1) * n_r + r.
class SpatialGrid {
 public:
  SpatialGrid(Index n_r, Index n_c);

  Index rows() const noexcept { return n_r_; }
  Index cols() const noexcept { return n_c_; }
  Index pixels() const noexcept { return n_r_ * n_c_; }

  /// 0-based flat index of the 0-based pixel (r, c); no bounds check.
  Index flat(Index r, Index c) const noexcept { return c * n_r_ + r; }

  friend bool operator==(const SpatialGrid&, const SpatialGrid&) = default;

 private:
  Index n_r_;
  Index n_c_;
};

/// 1-based flat index of the 1-based pixel (r, c). Throws OutOfRange.
Index pixel_index(Index r, Index c, const SpatialGrid& grid);

/// L x m mixing matrix; one column per candidate signature.
class SpectralLibrary {
 public:
  explicit SpectralLibrary(Matrix a);

  const Matrix& matrix() const noexcept { return a_; }
  Index bands() const noexcept { return a_.rows(); }
  Index signatures() const noexcept { return a_.cols(); }

 private:
  Matrix a_;
};

/// Observed data Y (L x n) bound to its spatial grid.
class HyperCube {
 public:
  HyperCube(Matrix y, SpatialGrid grid);

  const Matrix& data() const noexcept { return y_; }
  const SpatialGrid& grid() const noexcept { return grid_; }
  Index bands() const noexcept { return y_.rows(); }
  Index pixels() const noexcept { return y_.cols(); }

 private:
  Matrix y_;
  SpatialGrid grid_;
};

/// m x n abundance matrix. Entries may be negative (dual multiplier iterates).
class AbundanceMap {
 public:
  AbundanceMap(Matrix x, SpatialGrid grid);

  const Matrix& data() const noexcept { return x_; }
  const SpatialGrid& grid() const noexcept { return grid_; }
  Index signatures() const noexcept { return x_.rows(); }
  Index pixels() const noexcept { return x_.cols(); }

 private:
  Matrix x_;
  SpatialGrid grid_;
};

HyperCube cube_from_matrix(Matrix y, Index n_r, Index n_c);

bool all_finite(const Matrix& m) noexcept;

}  // namespace hsu
