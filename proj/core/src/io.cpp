#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "hsu/io.hpp"
#include "hsu/prox.hpp"
#include "hsu/spatial_ops.hpp"

namespace hsu {

namespace {

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xffU);
    return r;
  }
}

void put_u64(std::vector<char>& buf, std::size_t at, std::uint64_t v) {
  v = to_little(v);
  std::memcpy(buf.data() + at, &v, 8);
}

std::uint64_t get_u64(const std::vector<char>& buf, std::size_t at) {
  std::uint64_t v = 0;
  std::memcpy(&v, buf.data() + at, 8);
  return to_little(v);
}

std::string lower_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double_cell(const std::string& cell, const std::string& where) {
  const std::string t = trim(cell);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::IoError, where + ": cannot parse '" + t + "' as a number");
  }
  return v;
}

Matrix read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(parse_double_cell(cell, path.string() + ":" + std::to_string(lineno)));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  path.string() + ":" + std::to_string(lineno) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  const Index r = static_cast<Index>(rows.size());
  const Index c = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  if (!all_finite(m)) throw Error(ErrorCode::NonFiniteInput, path.string() + " has non-finite entries");
  return m;
}

std::string fmt(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_real(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v)) {
    throw ConfigError(key, "expected a finite number, got '" + value + "'");
  }
  return v;
}

long long parse_integer(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected an integer, got '" + value + "'");
  }
  return v;
}

SolverKind parse_solver(const std::string& value) {
  if (value == "primal") return SolverKind::Primal;
  if (value == "dual-sgs") return SolverKind::DualSgs;
  throw ConfigError("solver", "expected primal or dual-sgs, got '" + value + "'");
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  if (!all_finite(m)) throw Error(ErrorCode::NonFiniteInput, "refusing to write non-finite matrix");
  const std::size_t count = static_cast<std::size_t>(m.size());
  std::vector<char> buf(kMatrixHeaderBytes + 8 * count);
  std::memcpy(buf.data(), kMatrixMagic, 8);
  put_u64(buf, 8, static_cast<std::uint64_t>(m.rows()));
  put_u64(buf, 16, static_cast<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < count; ++i) {
    put_u64(buf, kMatrixHeaderBytes + 8 * i, std::bit_cast<std::uint64_t>(m.data()[i]));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

Matrix read_matrix(const std::filesystem::path& path) {
  if (lower_extension(path) == ".csv") return read_csv(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 8) throw Error(ErrorCode::TruncatedFile, path.string() + ": shorter than magic");
  if (std::memcmp(buf.data(), kMatrixMagic, 8) != 0) {
    throw Error(ErrorCode::BadMagic, path.string() + ": not an HSUMTX01 file");
  }
  if (buf.size() < kMatrixHeaderBytes) {
    throw Error(ErrorCode::TruncatedFile, path.string() + ": header truncated");
  }
  const std::uint64_t rows = get_u64(buf, 8);
  const std::uint64_t cols = get_u64(buf, 16);
  const std::uint64_t payload = buf.size() - kMatrixHeaderBytes;
  if (cols != 0 && rows > payload / 8 / cols) {
    throw Error(ErrorCode::TruncatedFile, path.string() + ": payload shorter than header claims");
  }
  if (payload != 8 * rows * cols) {
    throw Error(ErrorCode::TruncatedFile, path.string() + ": payload length " +
                                              std::to_string(payload) + " does not match " +
                                              std::to_string(rows) + "x" + std::to_string(cols));
  }
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.data()[i] = std::bit_cast<double>(get_u64(buf, kMatrixHeaderBytes + 8 * i));
  }
  if (!all_finite(m)) throw Error(ErrorCode::NonFiniteInput, path.string() + " has non-finite entries");
  return m;
}

void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  SolverConfig& s = cfg.solver_config;
  if (key == "solver") {
    cfg.solver = parse_solver(value);
  } else if (key == "rho") {
    s.rho = parse_rho(value);
  } else if (key == "lambda") {
    s.lambda = parse_real(key, value);
  } else if (key == "lambda_tv") {
    s.lambda_tv = parse_real(key, value);
  } else if (key == "sigma") {
    s.sigma = parse_real(key, value);
  } else if (key == "tau") {
    s.tau = parse_real(key, value);
  } else if (key == "tol1") {
    s.tol1 = parse_real(key, value);
  } else if (key == "tol2") {
    s.tol2 = parse_real(key, value);
  } else if (key == "inexact_tol") {
    s.inexact_tol = parse_real(key, value);
  } else if (key == "max_iter") {
    const long long v = parse_integer(key, value);
    if (v < 1 || v > 100'000'000) throw ConfigError(key, "must be in [1, 1e8]");
    s.max_iter = static_cast<int>(v);
  } else if (key == "boundary") {
    s.boundary = parse_boundary(value);
  } else if (key == "seed") {
    const long long v = parse_integer(key, value);
    if (v < 0) throw ConfigError(key, "must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(v);
  } else if (key == "grid.n_r" || key == "grid.n_c") {
    const long long v = parse_integer(key, value);
    if (v < 1) throw ConfigError(key, "must be >= 1");
    (key == "grid.n_r" ? cfg.grid_rows : cfg.grid_cols) = static_cast<Index>(v);
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

RunConfig run_config_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  RunConfig cfg;
  // The solver choice decides the defaults the remaining keys override.
  for (const auto& [key, value] : pairs) {
    if (key == "solver") cfg.solver = parse_solver(value);
  }
  cfg.solver_config = cfg.solver == SolverKind::Primal ? SolverConfig::primal_defaults()
                                                       : SolverConfig::dual_defaults();
  for (const auto& [key, value] : pairs) apply_config_key(cfg, key, value);
  cfg.solver_config.validate();
  return cfg;
}

std::vector<std::pair<std::string, std::string>> parse_config_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(trim(line), "line " + std::to_string(lineno) + " is not 'key = value'");
    }
    pairs.emplace_back(trim(std::string_view(line).substr(0, eq)),
                       trim(std::string_view(line).substr(eq + 1)));
  }
  return pairs;
}

RunConfig parse_run_config(const std::string& text) {
  return run_config_from_pairs(parse_config_pairs(text));
}

RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string format_run_config(const RunConfig& cfg) {
  const SolverConfig& s = cfg.solver_config;
  std::ostringstream out;
  out << "solver = " << (cfg.solver == SolverKind::Primal ? "primal" : "dual-sgs") << "\n"
      << "rho = " << to_string(s.rho) << "\n"
      << "lambda = " << fmt(s.lambda) << "\n"
      << "lambda_tv = " << fmt(s.lambda_tv) << "\n"
      << "sigma = " << fmt(s.sigma) << "\n"
      << "tau = " << fmt(s.tau) << "\n"
      << "tol1 = " << fmt(s.tol1) << "\n"
      << "tol2 = " << fmt(s.tol2) << "\n"
      << "inexact_tol = " << fmt(s.inexact_tol) << "\n"
      << "max_iter = " << s.max_iter << "\n"
      << "boundary = " << to_string(s.boundary) << "\n"
      << "seed = " << cfg.seed << "\n";
  if (cfg.grid_rows) out << "grid.n_r = " << *cfg.grid_rows << "\n";
  if (cfg.grid_cols) out << "grid.n_c = " << *cfg.grid_cols << "\n";
  return out.str();
}

void write_trace_csv(const std::filesystem::path& path, const UnmixReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << "iter,R_P,R_D,Error,objective,elapsed_seconds\n";
  for (const IterationRecord& r : report.trace) {
    out << r.iter << ',' << fmt(r.r_primal) << ',' << fmt(r.r_dual) << ',' << fmt(r.error) << ','
        << fmt(r.objective) << ',' << fmt(r.elapsed_seconds) << '\n';
  }
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

}  // namespace hsu
