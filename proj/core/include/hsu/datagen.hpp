#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsu/types.hpp"

namespace hsu {

/// Smooth nonnegative signatures mixed towards a shared base curve until the
/// mutual coherence reaches `coherence_target`. Stand-in for a measured
/// mineral library. Throws UnreachableCoherence for targets outside [0, 1).
SpectralLibrary gen_library(Index bands, Index signatures, double coherence_target,
                            std::uint64_t seed);

struct Dc1Abundances {
  AbundanceMap x_true;
  std::vector<Index> active;  // library columns in use, 0-based, ascending
};

/// Piecewise-constant square patches of pure and two-member mixtures over a
/// mixed background, q active library columns picked at random. Every pixel
/// is nonnegative and sums to one. Throws TooManyEndmembers when q > m.
Dc1Abundances gen_abundances_dc1(const SpatialGrid& grid, const SpectralLibrary& a, Index q,
                                 std::uint64_t seed);

/// q spatially smooth fields: Gaussian noise blurred with a Gaussian kernel of
/// width `correlation_length` pixels (periodic wrap), mapped through a
/// per-pixel softmax. correlation_length <= 0 disables smoothing.
Dc1Abundances gen_abundances_smooth(const SpatialGrid& grid, const SpectralLibrary& a, Index q,
                                    double correlation_length, std::uint64_t seed);

enum class NoiseKind { White, Correlated };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::White;
  double snr_db = 30.0;  // +infinity leaves the cube untouched
  // Normalised angular cutoff in (0, pi] for Correlated noise; 5 pi / L when unset.
  std::optional<double> cutoff;
  std::uint64_t seed = 0;
};

/// Adds Gaussian noise rescaled so that 10 log10(||clean||^2 / ||noise||^2)
/// equals snr_db. Correlated noise is ideal-low-pass filtered along the
/// spectral axis before rescaling. Throws ZeroSignal for an all-zero cube.
HyperCube add_noise(const HyperCube& clean, const NoiseSpec& spec);

/// The noise field alone (already scaled), same shape as `clean`.
Matrix make_noise(const HyperCube& clean, const NoiseSpec& spec);

}  // namespace hsu
