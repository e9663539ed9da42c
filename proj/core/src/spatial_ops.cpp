#include <string>

#include "hsu/spatial_ops.hpp"

namespace hsu {

Boundary parse_boundary(std::string_view name) {
  if (name == "periodic") return Boundary::Periodic;
  if (name == "reflexive") return Boundary::Reflexive;
  throw ConfigError("boundary", "expected periodic or reflexive, got '" + std::string(name) + "'");
}

std::string_view to_string(Boundary b) noexcept {
  return b == Boundary::Periodic ? "periodic" : "reflexive";
}

DiffOp stacked_op(Boundary b) noexcept {
  return b == Boundary::Periodic ? DiffOp::PeriodicStacked : DiffOp::ReflexiveStacked;
}

std::pair<Index, Index> diff_output_shape(DiffOp op, Index m, const SpatialGrid& grid) noexcept {
  const Index n = grid.pixels();
  switch (op) {
    case DiffOp::ReflexiveAcrossColumns: return {m, n - grid.rows()};
    case DiffOp::ReflexiveWithinColumns: return {m, n - grid.cols()};
    case DiffOp::PeriodicHorizontal:
    case DiffOp::PeriodicVertical: return {m, n};
    case DiffOp::PeriodicStacked: return {2 * m, n};
    case DiffOp::ReflexiveStacked: return {m, 2 * n - grid.rows() - grid.cols()};
  }
  return {0, 0};
}

namespace {

void require_pixels(const Matrix& x, const SpatialGrid& grid) {
  if (x.cols() != grid.pixels()) {
    throw Error(ErrorCode::DimensionMismatch, "operand has " + std::to_string(x.cols()) +
                                                  " columns, grid has " +
                                                  std::to_string(grid.pixels()) + " pixels");
  }
}

void across_columns(const Matrix& x, const SpatialGrid& grid, Eigen::Ref<Matrix> out) {
  const Index k = grid.pixels() - grid.rows();
  out = x.rightCols(k) - x.leftCols(k);
}

void within_columns(const Matrix& x, const SpatialGrid& grid, Eigen::Ref<Matrix> out) {
  const Index n_r = grid.rows();
  if (n_r < 2) return;
  for (Index c = 0; c < grid.cols(); ++c) {
    out.middleCols(c * (n_r - 1), n_r - 1) =
        x.middleCols(c * n_r + 1, n_r - 1) - x.middleCols(c * n_r, n_r - 1);
  }
}

void across_columns_adjoint(const Eigen::Ref<const Matrix>& v, const SpatialGrid& grid,
                            Matrix& out) {
  const Index k = grid.pixels() - grid.rows();
  out.rightCols(k) += v;
  out.leftCols(k) -= v;
}

void within_columns_adjoint(const Eigen::Ref<const Matrix>& v, const SpatialGrid& grid,
                            Matrix& out) {
  const Index n_r = grid.rows();
  if (n_r < 2) return;
  for (Index c = 0; c < grid.cols(); ++c) {
    const auto block = v.middleCols(c * (n_r - 1), n_r - 1);
    out.middleCols(c * n_r + 1, n_r - 1) += block;
    out.middleCols(c * n_r, n_r - 1) -= block;
  }
}

// x_i - x_{right neighbour}; the right neighbour of flat i is i + n_r, wrapping.
void periodic_horizontal(const Matrix& x, const SpatialGrid& grid, Eigen::Ref<Matrix> out) {
  const Index n_r = grid.rows();
  const Index k = grid.pixels() - n_r;
  out.leftCols(k) = x.leftCols(k) - x.rightCols(k);
  out.rightCols(n_r) = x.rightCols(n_r) - x.leftCols(n_r);
}

void periodic_vertical(const Matrix& x, const SpatialGrid& grid, Eigen::Ref<Matrix> out) {
  const Index n_r = grid.rows();
  for (Index c = 0; c < grid.cols(); ++c) {
    const auto col = x.middleCols(c * n_r, n_r);
    auto dst = out.middleCols(c * n_r, n_r);
    dst.leftCols(n_r - 1) = col.leftCols(n_r - 1) - col.rightCols(n_r - 1);
    dst.col(n_r - 1) = col.col(n_r - 1) - col.col(0);
  }
}

void periodic_horizontal_adjoint(const Eigen::Ref<const Matrix>& v, const SpatialGrid& grid,
                                 Matrix& out) {
  const Index n_r = grid.rows();
  const Index k = grid.pixels() - n_r;
  out += v;
  out.rightCols(k) -= v.leftCols(k);
  out.leftCols(n_r) -= v.rightCols(n_r);
}

void periodic_vertical_adjoint(const Eigen::Ref<const Matrix>& v, const SpatialGrid& grid,
                               Matrix& out) {
  const Index n_r = grid.rows();
  out += v;
  for (Index c = 0; c < grid.cols(); ++c) {
    const auto src = v.middleCols(c * n_r, n_r);
    auto dst = out.middleCols(c * n_r, n_r);
    dst.rightCols(n_r - 1) -= src.leftCols(n_r - 1);
    dst.col(0) -= src.col(n_r - 1);
  }
}

}  // namespace

Matrix apply_diff(DiffOp op, const Matrix& x, const SpatialGrid& grid) {
  require_pixels(x, grid);
  const Index m = x.rows();
  const auto [rows, cols] = diff_output_shape(op, m, grid);
  Matrix out(rows, cols);
  switch (op) {
    case DiffOp::ReflexiveAcrossColumns: across_columns(x, grid, out); break;
    case DiffOp::ReflexiveWithinColumns: within_columns(x, grid, out); break;
    case DiffOp::PeriodicHorizontal: periodic_horizontal(x, grid, out); break;
    case DiffOp::PeriodicVertical: periodic_vertical(x, grid, out); break;
    case DiffOp::PeriodicStacked:
      periodic_horizontal(x, grid, out.topRows(m));
      periodic_vertical(x, grid, out.bottomRows(m));
      break;
    case DiffOp::ReflexiveStacked: {
      const Index k = grid.pixels() - grid.rows();
      across_columns(x, grid, out.leftCols(k));
      within_columns(x, grid, out.rightCols(cols - k));
      break;
    }
  }
  return out;
}

Matrix apply_diff_adjoint(DiffOp op, const Matrix& v, const SpatialGrid& grid) {
  const Index m = op == DiffOp::PeriodicStacked ? v.rows() / 2 : v.rows();
  const auto [rows, cols] = diff_output_shape(op, m, grid);
  if (v.rows() != rows || v.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "adjoint operand is " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()) +
                    ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  Matrix out = Matrix::Zero(m, grid.pixels());
  switch (op) {
    case DiffOp::ReflexiveAcrossColumns: across_columns_adjoint(v, grid, out); break;
    case DiffOp::ReflexiveWithinColumns: within_columns_adjoint(v, grid, out); break;
    case DiffOp::PeriodicHorizontal: periodic_horizontal_adjoint(v, grid, out); break;
    case DiffOp::PeriodicVertical: periodic_vertical_adjoint(v, grid, out); break;
    case DiffOp::PeriodicStacked:
      periodic_horizontal_adjoint(v.topRows(m), grid, out);
      periodic_vertical_adjoint(v.bottomRows(m), grid, out);
      break;
    case DiffOp::ReflexiveStacked: {
      const Index k = grid.pixels() - grid.rows();
      across_columns_adjoint(v.leftCols(k), grid, out);
      within_columns_adjoint(v.rightCols(cols - k), grid, out);
      break;
    }
  }
  return out;
}

}  // namespace hsu
