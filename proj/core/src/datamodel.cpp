#include <string>

#include "hsu/error.hpp"
#include "hsu/types.hpp"

namespace hsu {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NegativeThreshold: return "NegativeThreshold";
    case ErrorCode::EmptySignal: return "EmptySignal";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::GridTooLargeForDense: return "GridTooLargeForDense";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::UnreachableCoherence: return "UnreachableCoherence";
    case ErrorCode::TooManyEndmembers: return "TooManyEndmembers";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InexactSolve: return "InexactSolve";
  }
  return "Unknown";
}

bool all_finite(const Matrix& m) noexcept { return m.allFinite(); }

SpatialGrid::SpatialGrid(Index n_r, Index n_c) : n_r_(n_r), n_c_(n_c) {
  if (n_r < 1 || n_c < 1) {
    throw Error(ErrorCode::DimensionMismatch, "grid dimensions must be positive, got " +
                                                  std::to_string(n_r) + "x" + std::to_string(n_c));
  }
}

Index pixel_index(Index r, Index c, const SpatialGrid& grid) {
  if (r < 1 || r > grid.rows() || c < 1 || c > grid.cols()) {
    throw Error(ErrorCode::OutOfRange, "pixel (" + std::to_string(r) + ", " + std::to_string(c) +
                                           ") outside " + std::to_string(grid.rows()) + "x" +
                                           std::to_string(grid.cols()) + " grid");
  }
  return (c - 1) * grid.rows() + r;
}

SpectralLibrary::SpectralLibrary(Matrix a) : a_(std::move(a)) {
  if (a_.rows() < 1 || a_.cols() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "spectral library must be at least 1x1");
  }
  if (!a_.allFinite()) throw Error(ErrorCode::NonFiniteInput, "spectral library");
}

HyperCube::HyperCube(Matrix y, SpatialGrid grid) : y_(std::move(y)), grid_(grid) {
  if (y_.cols() != grid_.pixels()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cube has " + std::to_string(y_.cols()) + " pixels but grid " +
                    std::to_string(grid_.rows()) + "x" + std::to_string(grid_.cols()) + " has " +
                    std::to_string(grid_.pixels()));
  }
  if (!y_.allFinite()) throw Error(ErrorCode::NonFiniteInput, "hyperspectral cube");
}

AbundanceMap::AbundanceMap(Matrix x, SpatialGrid grid) : x_(std::move(x)), grid_(grid) {
  if (x_.cols() != grid_.pixels()) {
    throw Error(ErrorCode::DimensionMismatch,
                "abundance map has " + std::to_string(x_.cols()) + " pixels, grid has " +
                    std::to_string(grid_.pixels()));
  }
  if (!x_.allFinite()) throw Error(ErrorCode::NonFiniteInput, "abundance map");
}

HyperCube cube_from_matrix(Matrix y, Index n_r, Index n_c) {
  if (n_r < 1 || n_c < 1 || n_r * n_c != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(n_r) + "x" + std::to_string(n_c) + " grid does not match " +
                    std::to_string(y.cols()) + " pixels");
  }
  return HyperCube(std::move(y), SpatialGrid(n_r, n_c));
}

}  // namespace hsu
