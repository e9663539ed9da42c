#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hsu/parallel.hpp"
#include "hsu/prox.hpp"

namespace hsu {

Rho parse_rho(std::string_view name) {
  if (name == "l1") return Rho::L1;
  if (name == "l21") return Rho::L21;
  throw ConfigError("rho", "expected l1 or l21, got '" + std::string(name) + "'");
}

std::string_view to_string(Rho rho) noexcept { return rho == Rho::L1 ? "l1" : "l21"; }

void ProxSpec::validate() const {
  if (!(lambda >= 0.0)) throw ConfigError("lambda", "must be nonnegative");
  if (!(lambda_tv >= 0.0)) throw ConfigError("lambda_tv", "must be nonnegative");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma", "must be positive");
}

namespace {

void require_threshold(double kappa) {
  if (!(kappa >= 0.0)) {
    throw Error(ErrorCode::NegativeThreshold, "threshold " + std::to_string(kappa));
  }
}

}  // namespace

Matrix soft_threshold(const Matrix& m, double kappa) {
  require_threshold(kappa);
  if (kappa == 0.0) return m;
  return m.unaryExpr([kappa](double v) {
    const double mag = std::abs(v) - kappa;
    return mag > 0.0 ? std::copysign(mag, v) : 0.0;
  });
}

Matrix group_shrink_rows(const Matrix& m, double kappa) {
  require_threshold(kappa);
  if (kappa == 0.0) return m;
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    const double excess = std::max(m.row(i).norm() - kappa, 0.0);
    const double alpha = excess / (excess + kappa);
    out.row(i) = alpha * m.row(i);
  }
  return out;
}

Matrix project_nonnegative(const Matrix& m) {
  return m.unaryExpr([](double v) { return v > 0.0 ? v : 0.0; });
}

// Condat's direct scan. The running segment [k0, k] holds a tentative value
// in [vmin, vmax]; umin/umax track the dual variable of the lower/upper
// candidate. A jump is emitted as soon as one candidate leaves [-kappa, kappa].
void tv1d(std::span<const double> y, std::span<double> out, double kappa) {
  require_threshold(kappa);
  const std::size_t width = y.size();
  if (width == 0) throw Error(ErrorCode::EmptySignal, "tv1d on an empty signal");
  if (out.size() != width) throw Error(ErrorCode::DimensionMismatch, "tv1d output length");
  if (kappa == 0.0 || width == 1) {
    if (out.data() != y.data()) std::copy(y.begin(), y.end(), out.begin());
    return;
  }
  // The in-place case would overwrite samples the scan still has to read.
  std::vector<double> copy;
  const double* in = y.data();
  if (out.data() == y.data()) {
    copy.assign(y.begin(), y.end());
    in = copy.data();
  }

  const auto last = static_cast<std::ptrdiff_t>(width) - 1;
  const double two_kappa = 2.0 * kappa;
  std::ptrdiff_t k = 0, k0 = 0, kplus = 0, kminus = 0;
  double umin = kappa, umax = -kappa;
  double vmin = in[0] - kappa, vmax = in[0] + kappa;

  for (;;) {
    while (k == last) {
      if (umin < 0.0) {
        do out[k0++] = vmin; while (k0 <= kminus);
        k = kminus = k0;
        vmin = in[k];
        umin = kappa;
        umax = vmin + umin - vmax;
      } else if (umax > 0.0) {
        do out[k0++] = vmax; while (k0 <= kplus);
        k = kplus = k0;
        vmax = in[k];
        umax = -kappa;
        umin = vmax + umax - vmin;
      } else {
        vmin += umin / static_cast<double>(k - k0 + 1);
        do out[k0++] = vmin; while (k0 <= k);
        return;
      }
    }
    if ((umin += in[k + 1] - vmin) < -kappa) {
      do out[k0++] = vmin; while (k0 <= kminus);
      k = kplus = kminus = k0;
      vmin = in[k];
      vmax = vmin + two_kappa;
      umin = kappa;
      umax = -kappa;
    } else if ((umax += in[k + 1] - vmax) > kappa) {
      do out[k0++] = vmax; while (k0 <= kplus);
      k = kplus = kminus = k0;
      vmax = in[k];
      vmin = vmax - two_kappa;
      umin = kappa;
      umax = -kappa;
    } else {
      ++k;
      if (umin >= kappa) {
        kminus = k;
        vmin += (umin - kappa) / static_cast<double>(kminus - k0 + 1);
        umin = kappa;
      }
      if (umax <= -kappa) {
        kplus = k;
        vmax += (umax + kappa) / static_cast<double>(kplus - k0 + 1);
        umax = -kappa;
      }
    }
  }
}

Vector tv1d(const Vector& y, double kappa) {
  Vector out(y.size());
  tv1d(std::span<const double>(y.data(), static_cast<std::size_t>(y.size())),
       std::span<double>(out.data(), static_cast<std::size_t>(out.size())), kappa);
  return out;
}

namespace {

void require_grid(const Matrix& m, const SpatialGrid& grid) {
  if (m.cols() != grid.pixels()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(m.cols()) +
                                                  " columns, grid has " +
                                                  std::to_string(grid.pixels()) + " pixels");
  }
}

// Applies tv1d to `count` strided sequences of `length` samples taken from
// the row-major view of M (entry (l, p) at l + p * m). Sequence s starts at
// first(s) and advances by `stride` entries.
template <typename First>
Matrix tv_over_sequences(const Matrix& m, double kappa, Index count, Index length, Index stride,
                         First first) {
  Matrix out = m;
  parallel_for(count, [&](Index begin, Index end) {
    std::vector<double> buf(static_cast<std::size_t>(length));
    std::vector<double> res(static_cast<std::size_t>(length));
    const double* src = m.data();
    double* dst = out.data();
    for (Index s = begin; s < end; ++s) {
      const Index start = first(s);
      for (Index t = 0; t < length; ++t) buf[static_cast<std::size_t>(t)] = src[start + t * stride];
      tv1d(buf, res, kappa);
      for (Index t = 0; t < length; ++t) dst[start + t * stride] = res[static_cast<std::size_t>(t)];
    }
  });
  return out;
}

}  // namespace

Matrix prox_vertical_tv(const Matrix& m, double kappa, const SpatialGrid& grid) {
  require_threshold(kappa);
  require_grid(m, grid);
  if (kappa == 0.0 || grid.cols() < 2) return m;
  const Index rows = m.rows();
  const Index n_r = grid.rows();
  // Sequence (l, r): pixels r, r + n_r, ..., entry (l, p) at l + p * rows.
  return tv_over_sequences(m, kappa, rows * n_r, grid.cols(), n_r * rows, [=](Index s) {
    const Index l = s % rows;
    const Index r = s / rows;
    return l + r * rows;
  });
}

Matrix prox_horizontal_tv(const Matrix& m, double kappa, const SpatialGrid& grid) {
  require_threshold(kappa);
  require_grid(m, grid);
  if (kappa == 0.0 || grid.rows() < 2) return m;
  const Index rows = m.rows();
  const Index n_r = grid.rows();
  // Sequence (l, c): pixels c n_r, c n_r + 1, ..., c n_r + n_r - 1.
  return tv_over_sequences(m, kappa, rows * grid.cols(), n_r, rows, [=](Index s) {
    const Index l = s % rows;
    const Index c = s / rows;
    return l + c * n_r * rows;
  });
}

Matrix prox_p(const Matrix& v, const ProxSpec& spec, const SpatialGrid& grid) {
  spec.validate();
  const Matrix z = project_nonnegative(prox_vertical_tv(v, spec.sigma * spec.lambda_tv, grid));
  const double kappa = spec.sigma * spec.lambda;
  return spec.rho == Rho::L1 ? soft_threshold(z, kappa) : group_shrink_rows(z, kappa);
}

Matrix prox_conjugate(const ProxFn& prox_of_sigma_f, const Matrix& v, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("sigma", "must be positive");
  return v - prox_of_sigma_f(sigma * v) / sigma;
}

}  // namespace hsu
