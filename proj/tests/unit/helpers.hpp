#pragma once

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "hsu/types.hpp"

namespace hsu::test {

inline Matrix random_matrix(Index rows, Index cols, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = g(rng);
  }
  return m;
}

inline Matrix random_positive(Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = u(rng);
  }
  return m;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* env = std::getenv("HSU_TEST_TMP");
  std::filesystem::path base =
      env != nullptr ? std::filesystem::path(env) : std::filesystem::temp_directory_path() / "hsu";
  std::filesystem::path dir = base / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace hsu::test
