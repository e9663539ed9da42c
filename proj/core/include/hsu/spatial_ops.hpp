#pragma once

#include <string_view>
#include <utility>

#include "hsu/types.hpp"

namespace hsu {

/// Boundary convention of the total-variation term.
enum class Boundary { Periodic, Reflexive };

Boundary parse_boundary(std::string_view name);
std::string_view to_string(Boundary b) noexcept;

/// First-order difference operators acting on each row (band) of an m x n
/// abundance matrix.
///
///   ReflexiveAcrossColumns  c_i = x_{i+n_r} - x_i, i = 1..n-n_r   ("H^_v")
///   ReflexiveWithinColumns  e_i = x_{i+1} - x_i, i not a multiple of n_r
///                           ("H^_h"), n - n_c outputs in ascending i
///   PeriodicHorizontal      x_i - x_{right neighbour, wrapping}    ("H_h")
///   PeriodicVertical        x_i - x_{lower neighbour, wrapping}    ("H_v")
///   PeriodicStacked         [H_h X ; H_v X], 2m x n                 ("H")
///   ReflexiveStacked        [H^_v X , H^_h X], m x (2n - n_r - n_c)
///
/// The reflexive names follow the usual "v"/"h" labels even though H^_v
/// differences neighbouring image columns.
enum class DiffOp {
  ReflexiveAcrossColumns,
  ReflexiveWithinColumns,
  PeriodicHorizontal,
  PeriodicVertical,
  PeriodicStacked,
  ReflexiveStacked,
};

/// Stacked full-TV operator for a boundary convention.
DiffOp stacked_op(Boundary b) noexcept;

/// (rows, cols) of apply_diff(op, X) for an m-row X on `grid`.
std::pair<Index, Index> diff_output_shape(DiffOp op, Index m, const SpatialGrid& grid) noexcept;

Matrix apply_diff(DiffOp op, const Matrix& x, const SpatialGrid& grid);

/// Exact linear adjoint of apply_diff.
Matrix apply_diff_adjoint(DiffOp op, const Matrix& v, const SpatialGrid& grid);

}  // namespace hsu
