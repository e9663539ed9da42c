#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "hsu/types.hpp"

namespace hsu {

/// Sparsity norm ||.||_{rho,1}: entrywise l1, or the sum of row l2 norms.
enum class Rho { L1, L21 };

Rho parse_rho(std::string_view name);
std::string_view to_string(Rho rho) noexcept;

struct ProxSpec {
  double lambda = 0.0;
  double lambda_tv = 0.0;
  Rho rho = Rho::L1;
  double sigma = 1.0;

  void validate() const;
};

/// sign(M) .* max(|M| - kappa, 0).
Matrix soft_threshold(const Matrix& m, double kappa);

/// Scales row i by max(||row||-kappa,0) / (max(||row||-kappa,0) + kappa).
Matrix group_shrink_rows(const Matrix& m, double kappa);

/// max(M, 0) entrywise; negative zeros come out as +0.
Matrix project_nonnegative(const Matrix& m);

/// Exact minimiser of kappa * sum_k |z_{k+1} - z_k| + 1/2 ||z - y||^2.
///
/// Direct (non-iterative) taut-string scan after L. Condat, "A direct
/// algorithm for 1D total variation denoising", IEEE SPL 2013. `out` may
/// alias `y`. Throws EmptySignal when y is empty, NegativeThreshold when
/// kappa < 0.
void tv1d(std::span<const double> y, std::span<double> out, double kappa);
Vector tv1d(const Vector& y, double kappa);

/// 1D TV on every sequence {M(l, (c-1) n_r + r)}_{c=1..n_c}: the prox of
/// kappa * ||H^_v(.)||_1. The m * n_r problems are solved independently.
Matrix prox_vertical_tv(const Matrix& m, double kappa, const SpatialGrid& grid);

/// 1D TV on every sequence {M(l, (c-1) n_r + r)}_{r=1..n_r}: the prox of
/// kappa * ||H^_h(.)||_1 (m * n_c independent problems).
Matrix prox_horizontal_tv(const Matrix& m, double kappa, const SpatialGrid& grid);

/// Prox of sigma * p with p = lambda ||.||_{rho,1} + indicator(>= 0) +
/// lambda_tv ||H^_v(.)||_1, evaluated at `v` by composing the vertical TV
/// prox, the nonnegative projection and the sparsity shrinkage.
Matrix prox_p(const Matrix& v, const ProxSpec& spec, const SpatialGrid& grid);

using ProxFn = std::function<Matrix(const Matrix&)>;

/// Prox of f^* / sigma at v via the Moreau identity, given w -> Prox_{sigma f}(w).
Matrix prox_conjugate(const ProxFn& prox_of_sigma_f, const Matrix& v, double sigma);

}  // namespace hsu
