#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsu/solver.hpp"
#include "hsu/types.hpp"

namespace hsu {

/// Binary matrix file: "HSUMTX01", rows and cols as little-endian u64, then
/// rows*cols little-endian IEEE-754 doubles in column-major order.
inline constexpr char kMatrixMagic[9] = "HSUMTX01";
inline constexpr std::size_t kMatrixHeaderBytes = 24;

void write_matrix(const std::filesystem::path& path, const Matrix& m);

/// Reads a MatrixFile, or a headerless CSV (one row per line) when the path
/// ends in ".csv". Throws BadMagic, TruncatedFile, NonFiniteInput, IoError.
Matrix read_matrix(const std::filesystem::path& path);

enum class SolverKind { Primal, DualSgs };

struct RunConfig {
  SolverKind solver = SolverKind::DualSgs;
  SolverConfig solver_config = SolverConfig::dual_defaults();
  std::uint64_t seed = 0;
  std::optional<Index> grid_rows;
  std::optional<Index> grid_cols;
};

/// `key = value` lines, '#' comments. Keys: solver, rho, lambda, lambda_tv,
/// sigma, tau, tol1, tol2, max_iter, boundary, seed, grid.n_r, grid.n_c.
/// Unknown keys and malformed values throw ConfigError naming the key; the
/// solver field picks the default iteration cap unless max_iter is given.
RunConfig parse_run_config(const std::string& text);
/// Splits config text into (key, value) pairs without interpreting them.
std::vector<std::pair<std::string, std::string>> parse_config_pairs(const std::string& text);
/// Same rules for already split pairs; later pairs override earlier ones.
RunConfig run_config_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);
RunConfig read_run_config(const std::filesystem::path& path);

/// Applies one `key = value` override on top of an existing config.
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

std::string format_run_config(const RunConfig& cfg);

/// One CSV line per iteration: iter,R_P,R_D,Error,objective,elapsed_seconds.
void write_trace_csv(const std::filesystem::path& path, const UnmixReport& report);

}  // namespace hsu
