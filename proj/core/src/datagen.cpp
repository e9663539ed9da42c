#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include <fftw3.h>

#include "fftw_lock.hpp"
#include "hsu/datagen.hpp"
#include "hsu/metrics.hpp"

namespace hsu {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, purpose, counter).
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t counter = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ splitmix64(purpose)) + counter));
}

Vector smooth_curve(Index bands, int bumps, std::mt19937_64& rng) {
  const double len = static_cast<double>(bands);
  std::uniform_real_distribution<double> center(0.0, len);
  std::uniform_real_distribution<double> width(std::max(1.0, len / 20.0), std::max(1.0, len / 4.0));
  std::uniform_real_distribution<double> amp(0.2, 1.0);
  Vector c = Vector::Constant(bands, 0.05);
  for (int b = 0; b < bumps; ++b) {
    const double mu = center(rng);
    const double w = width(rng);
    const double h = amp(rng);
    for (Index i = 0; i < bands; ++i) {
      const double t = (static_cast<double>(i) - mu) / w;
      c(i) += h * std::exp(-0.5 * t * t);
    }
  }
  return c;
}

void require_grid_and_q(const SpatialGrid& grid, const SpectralLibrary& a, Index q) {
  if (q < 1) throw Error(ErrorCode::OutOfRange, "q must be at least 1");
  if (q > a.signatures()) {
    throw Error(ErrorCode::TooManyEndmembers, "q = " + std::to_string(q) + " exceeds m = " +
                                                  std::to_string(a.signatures()));
  }
  if (grid.pixels() < 1) throw Error(ErrorCode::OutOfRange, "empty grid");
}

std::vector<Index> choose_active(Index m, Index q, std::mt19937_64& rng) {
  std::vector<Index> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index i = 0; i < q; ++i) {
    std::uniform_int_distribution<Index> pick(i, m - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  pool.resize(static_cast<std::size_t>(q));
  std::sort(pool.begin(), pool.end());
  return pool;
}

Vector dirichlet_ones(Index q, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Vector w(q);
  for (Index i = 0; i < q; ++i) w(i) = e(rng);
  return w / w.sum();
}

// Renormalise each column so the sum is one to rounding.
void normalise_columns(Matrix& x) {
  for (Index j = 0; j < x.cols(); ++j) x.col(j) /= x.col(j).sum();
}

// Periodic 1D Gaussian blur of every row of `f` (viewed as n_r x n_c image) along one axis.
Matrix blur_periodic(const Matrix& img, double s) {
  const Index radius = std::max<Index>(1, static_cast<Index>(std::ceil(3.0 * s)));
  Vector k(2 * radius + 1);
  for (Index t = -radius; t <= radius; ++t) {
    const double u = static_cast<double>(t) / s;
    k(t + radius) = std::exp(-0.5 * u * u);
  }
  k /= k.sum();
  const Index rows = img.rows();
  const Index cols = img.cols();
  Matrix tmp = Matrix::Zero(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index t = -radius; t <= radius; ++t) {
      const Index src = ((c + t) % cols + cols) % cols;
      tmp.col(c) += k(t + radius) * img.col(src);
    }
  }
  Matrix out = Matrix::Zero(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index t = -radius; t <= radius; ++t) {
      const Index src = ((r + t) % rows + rows) % rows;
      out.row(r) += k(t + radius) * tmp.row(src);
    }
  }
  return out;
}

}  // namespace

SpectralLibrary gen_library(Index bands, Index signatures, double coherence_target,
                            std::uint64_t seed) {
  if (bands < 1 || signatures < 1) {
    throw Error(ErrorCode::OutOfRange, "library needs L >= 1 and m >= 1");
  }
  if (!(coherence_target >= 0.0 && coherence_target < 1.0)) {
    throw Error(ErrorCode::UnreachableCoherence,
                "coherence target " + std::to_string(coherence_target) + " is not in [0, 1)");
  }
  auto rng = substream(seed, 1);
  const Vector base = smooth_curve(bands, 3, rng);
  Matrix pert(bands, signatures);
  for (Index j = 0; j < signatures; ++j) pert.col(j) = smooth_curve(bands, 4, rng);
  if (signatures == 1) return SpectralLibrary(pert);

  for (double w = 1.0; w > 1e-12; w *= 0.9) {
    Matrix a = w * pert + (1.0 - w) * base.replicate(1, signatures);
    SpectralLibrary lib(std::move(a));
    if (mutual_coherence(lib) >= coherence_target) return lib;
  }
  throw Error(ErrorCode::UnreachableCoherence,
              "could not reach coherence " + std::to_string(coherence_target));
}

Dc1Abundances gen_abundances_dc1(const SpatialGrid& grid, const SpectralLibrary& a, Index q,
                                 std::uint64_t seed) {
  require_grid_and_q(grid, a, q);
  auto rng = substream(seed, 2);
  std::vector<Index> active = choose_active(a.signatures(), q, rng);
  const Vector background = dirichlet_ones(q, rng);

  const Index patches = q == 1 ? 0 : 2 * q - 1;
  const Index per_side =
      std::max<Index>(1, static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(patches)))));
  Matrix w(q, grid.pixels());
  for (Index p = 0; p < grid.pixels(); ++p) w.col(p) = background;

  for (Index k = 0; k < patches; ++k) {
    Vector mix = Vector::Zero(q);
    if (k < q) {
      mix(k) = 1.0;
    } else {
      mix(k - q) = 0.5;
      mix(k - q + 1) = 0.5;
    }
    const Index cell_r = k / per_side;
    const Index cell_c = k % per_side;
    const Index r0 = cell_r * grid.rows() / per_side;
    const Index r1 = (cell_r + 1) * grid.rows() / per_side;
    const Index c0 = cell_c * grid.cols() / per_side;
    const Index c1 = (cell_c + 1) * grid.cols() / per_side;
    // Central half of the cell, at least one pixel when the cell is non-empty.
    const Index pr0 = r0 + (r1 - r0) / 4;
    const Index pr1 = std::max(pr0 + (r1 > r0 ? 1 : 0), r0 + 3 * (r1 - r0) / 4);
    const Index pc0 = c0 + (c1 - c0) / 4;
    const Index pc1 = std::max(pc0 + (c1 > c0 ? 1 : 0), c0 + 3 * (c1 - c0) / 4);
    for (Index c = pc0; c < pc1; ++c) {
      for (Index r = pr0; r < pr1; ++r) w.col(grid.flat(r, c)) = mix;
    }
  }
  normalise_columns(w);

  Matrix x = Matrix::Zero(a.signatures(), grid.pixels());
  for (Index i = 0; i < q; ++i) x.row(active[static_cast<std::size_t>(i)]) = w.row(i);
  return Dc1Abundances{AbundanceMap(std::move(x), grid), std::move(active)};
}

Dc1Abundances gen_abundances_smooth(const SpatialGrid& grid, const SpectralLibrary& a, Index q,
                                    double correlation_length, std::uint64_t seed) {
  require_grid_and_q(grid, a, q);
  if (!std::isfinite(correlation_length)) {
    throw Error(ErrorCode::OutOfRange, "correlation length must be finite");
  }
  auto rng = substream(seed, 3);
  std::vector<Index> active = choose_active(a.signatures(), q, rng);

  constexpr double kGain = 2.0;
  Matrix logits(q, grid.pixels());
  for (Index i = 0; i < q; ++i) {
    auto field_rng = substream(seed, 4, static_cast<std::uint64_t>(i));
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix img(grid.rows(), grid.cols());
    for (Index c = 0; c < grid.cols(); ++c) {
      for (Index r = 0; r < grid.rows(); ++r) img(r, c) = g(field_rng);
    }
    if (correlation_length > 0.0) {
      img = blur_periodic(img, correlation_length);
      const double mean = img.mean();
      const double sd = std::sqrt((img.array() - mean).square().mean());
      if (sd > 0.0) img = (img.array() - mean) / sd;
    }
    logits.row(i) = Eigen::Map<const Eigen::RowVectorXd>(img.data(), grid.pixels());
  }
  Matrix w(q, grid.pixels());
  for (Index p = 0; p < grid.pixels(); ++p) {
    const double top = logits.col(p).maxCoeff();
    w.col(p) = (kGain * (logits.col(p).array() - top)).exp().matrix();
  }
  normalise_columns(w);

  Matrix x = Matrix::Zero(a.signatures(), grid.pixels());
  for (Index i = 0; i < q; ++i) x.row(active[static_cast<std::size_t>(i)]) = w.row(i);
  return Dc1Abundances{AbundanceMap(std::move(x), grid), std::move(active)};
}

Matrix make_noise(const HyperCube& clean, const NoiseSpec& spec) {
  const Matrix& y = clean.data();
  const Index bands = y.rows();
  const Index pixels = y.cols();
  if (std::isnan(spec.snr_db) || spec.snr_db == -std::numeric_limits<double>::infinity()) {
    throw Error(ErrorCode::OutOfRange, "snr_db must be a number or +infinity");
  }
  const double cutoff = spec.cutoff.value_or(5.0 * std::numbers::pi / static_cast<double>(bands));
  if (spec.kind == NoiseKind::Correlated && !(cutoff > 0.0 && cutoff <= std::numbers::pi)) {
    throw Error(ErrorCode::OutOfRange, "cutoff must lie in (0, pi]");
  }
  const double signal = y.squaredNorm();
  if (signal == 0.0) throw Error(ErrorCode::ZeroSignal, "clean cube is identically zero");
  if (spec.snr_db == std::numeric_limits<double>::infinity()) return Matrix::Zero(bands, pixels);

  auto rng = substream(spec.seed, 5);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix noise(bands, pixels);
  for (Index j = 0; j < pixels; ++j) {
    for (Index i = 0; i < bands; ++i) noise(i, j) = g(rng);
  }

  if (spec.kind == NoiseKind::Correlated) {
    const Index bins = bands / 2 + 1;
    auto* spectrum = static_cast<fftw_complex*>(
        fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(bins * pixels)));
    const int n = static_cast<int>(bands);
    const int howmany = static_cast<int>(pixels);
    const int ibins = static_cast<int>(bins);
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
    {
      const std::lock_guard lock(fftw_planner_mutex());
      fwd = fftw_plan_many_dft_r2c(1, &n, howmany, noise.data(), nullptr, 1, n, spectrum, nullptr,
                                   1, ibins, FFTW_ESTIMATE);
      inv = fftw_plan_many_dft_c2r(1, &n, howmany, spectrum, nullptr, 1, ibins, noise.data(),
                                   nullptr, 1, n, FFTW_ESTIMATE);
    }
    // FFTW_ESTIMATE planning leaves the arrays untouched, so the draws survive.
    fftw_execute(fwd);
    for (Index j = 0; j < pixels; ++j) {
      for (Index k = 0; k < bins; ++k) {
        const double omega = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(bands);
        if (omega > cutoff) {
          spectrum[j * bins + k][0] = 0.0;
          spectrum[j * bins + k][1] = 0.0;
        }
      }
    }
    fftw_execute(inv);
    {
      const std::lock_guard lock(fftw_planner_mutex());
      fftw_destroy_plan(fwd);
      fftw_destroy_plan(inv);
    }
    fftw_free(spectrum);
    noise /= static_cast<double>(bands);
  }

  const double energy = noise.squaredNorm();
  const double target = signal / std::pow(10.0, spec.snr_db / 10.0);
  noise *= std::sqrt(target / energy);
  return noise;
}

HyperCube add_noise(const HyperCube& clean, const NoiseSpec& spec) {
  return HyperCube(clean.data() + make_noise(clean, spec), clean.grid());
}

}  // namespace hsu
