#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsu/datagen.hpp"
#include "hsu/io.hpp"
#include "hsu/metrics.hpp"
#include "hsu/parallel.hpp"
#include "hsu/sweep.hpp"

namespace hsu::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

// Options that map onto run-config keys; flags win over the config file.
struct ConfigOptions {
  std::string config_path;
  std::string solver;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sets;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "key = value run configuration file");
    app.add_option("--solver", solver, "primal or dual-sgs");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--set", sets, "extra key=value override (repeatable)");
  }

  RunConfig build() const {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!config_path.empty()) pairs = parse_config_pairs(read_text(config_path));
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
      pairs.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!solver.empty()) pairs.emplace_back("solver", solver);
    if (seed) pairs.emplace_back("seed", std::to_string(*seed));
    return run_config_from_pairs(pairs);
  }
};

SpatialGrid grid_for(const RunConfig& cfg, Index pixels) {
  Index rows = 0;
  Index cols = 0;
  if (cfg.grid_rows && cfg.grid_cols) {
    rows = *cfg.grid_rows;
    cols = *cfg.grid_cols;
  } else if (cfg.grid_rows) {
    rows = *cfg.grid_rows;
    cols = pixels / rows;
  } else if (cfg.grid_cols) {
    cols = *cfg.grid_cols;
    rows = pixels / cols;
  } else {
    const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(pixels))));
    if (side * side != pixels) {
      throw UsageError("cube has " + std::to_string(pixels) +
                       " pixels; set grid.n_r and grid.n_c for a non-square scene");
    }
    rows = cols = side;
  }
  if (rows * cols != pixels) {
    throw Error(ErrorCode::DimensionMismatch, "grid " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " does not cover " +
                                                  std::to_string(pixels) + " pixels");
  }
  return SpatialGrid(rows, cols);
}

// ---- gen-data ----

struct GenArgs {
  ConfigOptions config;
  std::string out = ".";
  Index rows = 20;
  Index cols = 20;
  Index bands = 50;
  Index signatures = 60;
  Index q = 5;
  double coherence = 0.9;
  std::string snr = "30";
  std::string noise = "white";
  std::string field = "dc1";
  double correlation_length = 4.0;
};

int gen_data(const GenArgs& g, std::ostream& out) {
  const RunConfig cfg = g.config.build();
  const SpatialGrid grid(cfg.grid_rows.value_or(g.rows), cfg.grid_cols.value_or(g.cols));
  double snr = std::numeric_limits<double>::infinity();
  if (g.snr != "inf") {
    try {
      std::size_t used = 0;
      snr = std::stod(g.snr, &used);
      if (used != g.snr.size()) throw std::invalid_argument(g.snr);
    } catch (const std::exception&) {
      throw UsageError("--snr expects a number or 'inf', got '" + g.snr + "'");
    }
  }
  NoiseSpec noise;
  if (g.noise == "white") {
    noise.kind = NoiseKind::White;
  } else if (g.noise == "correlated") {
    noise.kind = NoiseKind::Correlated;
  } else {
    throw UsageError("--noise expects white or correlated");
  }
  noise.snr_db = snr;
  noise.seed = cfg.seed + 2;

  const SpectralLibrary a = gen_library(g.bands, g.signatures, g.coherence, cfg.seed);
  Dc1Abundances truth = g.field == "dc1"      ? gen_abundances_dc1(grid, a, g.q, cfg.seed + 1)
                        : g.field == "smooth" ? gen_abundances_smooth(grid, a, g.q,
                                                                      g.correlation_length,
                                                                      cfg.seed + 1)
                                              : throw UsageError("--field expects dc1 or smooth");
  const HyperCube clean(a.matrix() * truth.x_true.data(), grid);
  const HyperCube noisy = add_noise(clean, noise);

  const fs::path dir(g.out);
  ensure_dir(dir);
  write_matrix(dir / "library.bin", a.matrix());
  write_matrix(dir / "clean.bin", clean.data());
  write_matrix(dir / "noisy.bin", noisy.data());
  write_matrix(dir / "truth.bin", truth.x_true.data());
  std::ofstream meta(dir / "meta.txt", std::ios::trunc);
  meta << "# generated by hsu gen-data; usable as --config for unmix\n"
       << "# bands = " << g.bands << "\n# signatures = " << g.signatures << "\n# q = " << g.q
       << "\n# coherence_target = " << num(g.coherence)
       << "\n# coherence = " << num(mutual_coherence(a)) << "\n# field = " << g.field
       << "\n# noise = " << g.noise << "\n# snr_db = " << g.snr << "\n# active =";
  for (Index j : truth.active) meta << ' ' << j;
  meta << "\nseed = " << cfg.seed << "\ngrid.n_r = " << grid.rows()
       << "\ngrid.n_c = " << grid.cols() << "\n";
  if (!meta) throw Error(ErrorCode::IoError, "cannot write meta.txt");
  out << "wrote library.bin clean.bin noisy.bin truth.bin meta.txt to " << dir.string() << "\n";
  return kOk;
}

// ---- unmix ----

struct UnmixArgs {
  ConfigOptions config;
  std::string cube;
  std::string library;
  std::string out = ".";
};

int unmix(const UnmixArgs& u, std::ostream& out) {
  const RunConfig cfg = u.config.build();
  const SpectralLibrary a(read_matrix(u.library));
  const Matrix ym = read_matrix(u.cube);
  const HyperCube y(ym, grid_for(cfg, ym.cols()));
  const UnmixReport report = run_solver(cfg.solver, y, a, cfg.solver_config);

  const fs::path dir(u.out);
  ensure_dir(dir);
  write_matrix(dir / "xhat.bin", report.x_hat.data());
  write_matrix(dir / "xhat_nonneg.bin", report.x_nonneg.data());
  write_trace_csv(dir / "trace.csv", report);
  std::ofstream rep(dir / "report.txt", std::ios::trunc);
  rep << format_run_config(cfg) << "termination = " << to_string(report.termination)
      << "\niterations = " << report.iterations << "\nseconds = " << num(report.seconds) << "\n";
  if (!report.trace.empty()) {
    const IterationRecord& last = report.trace.back();
    rep << "final_r_primal = " << num(last.r_primal) << "\nfinal_r_dual = " << num(last.r_dual)
        << "\nfinal_error = " << num(last.error) << "\nfinal_objective = " << num(last.objective)
        << "\n";
  }
  if (!rep) throw Error(ErrorCode::IoError, "cannot write report.txt");
  out << "termination " << to_string(report.termination) << " after " << report.iterations
      << " iterations (" << num(report.seconds) << " s)\n";
  if (report.termination == Termination::Diverged) {
    throw DivergedError("solver diverged at iteration " + std::to_string(report.iterations));
  }
  return kOk;
}

// ---- eval ----

struct EvalArgs {
  std::string truth;
  std::string estimate;
  std::string report;
  std::string out;
  double threshold = kDefaultSuccessThreshold;
};

std::map<std::string, std::string> read_report(const fs::path& p) {
  std::map<std::string, std::string> kv;
  for (auto& [k, v] : parse_config_pairs(read_text(p))) kv[k] = v;
  return kv;
}

int eval(const EvalArgs& e, std::ostream& out) {
  const Matrix x_true = read_matrix(e.truth);
  const Matrix x_hat = read_matrix(e.estimate);
  const EvalResult r = evaluate(x_true, x_hat, e.threshold);

  nlohmann::ordered_json j;
  j["sre_db"] = std::isfinite(r.sre_db) ? nlohmann::ordered_json(r.sre_db)
                                        : nlohmann::ordered_json("inf");
  j["p_s"] = r.p_s;
  j["threshold"] = e.threshold;
  j["pixels"] = x_true.cols();
  out << "SRE      " << std::fixed << std::setprecision(4) << r.sre_db << " dB\n"
      << "p_s      " << r.p_s << " (threshold " << e.threshold << ")\n";
  fs::path report_path = e.report;
  if (report_path.empty()) {
    const fs::path sibling = fs::path(e.estimate).parent_path() / "report.txt";
    if (fs::exists(sibling)) report_path = sibling;
  }
  if (!report_path.empty()) {
    const auto kv = read_report(report_path);
    auto get = [&](const char* k) {
      const auto it = kv.find(k);
      return it == kv.end() ? std::string() : it->second;
    };
    out << "solver   " << get("solver") << ", " << get("iterations") << " iterations, "
        << get("termination") << ", " << get("seconds") << " s\n";
    j["solver"] = get("solver");
    j["termination"] = get("termination");
    j["iterations"] = std::stoi(get("iterations").empty() ? "0" : get("iterations"));
    j["seconds"] = std::stod(get("seconds").empty() ? "0" : get("seconds"));
  }
  out.unsetf(std::ios::floatfield);
  out << j.dump() << "\n";
  if (!e.out.empty()) {
    ensure_dir(e.out);
    std::ofstream f(fs::path(e.out) / "eval.json", std::ios::trunc);
    f << j.dump(2) << "\n";
    if (!f) throw Error(ErrorCode::IoError, "cannot write eval.json");
  }
  return kOk;
}

// ---- sweep ----

struct SweepArgs {
  ConfigOptions config;
  std::string cube;
  std::string library;
  std::string truth;
  std::string out = ".";
  bool parallel = false;
  bool include_zero_tv = false;
};

int sweep(const SweepArgs& s, std::ostream& out) {
  const RunConfig cfg = s.config.build();
  const SpectralLibrary a(read_matrix(s.library));
  const Matrix ym = read_matrix(s.cube);
  const HyperCube y(ym, grid_for(cfg, ym.cols()));
  const Matrix x_true = read_matrix(s.truth);
  const std::vector<double>& lambdas = default_parameter_grid();
  std::vector<double> tvs = default_parameter_grid();
  if (s.include_zero_tv) tvs.push_back(0.0);
  const unsigned threads = s.parallel ? std::max(1U, thread_budget()) : 1U;
  const auto points = run_sweep(y, a, x_true, cfg.solver, cfg.solver_config, lambdas, tvs, threads);

  const fs::path dir(s.out);
  ensure_dir(dir);
  std::ofstream csv(dir / "sweep.csv", std::ios::trunc);
  csv << "lambda,lambda_tv,sre_db,iterations,termination\n";
  for (const SweepPoint& p : points) {
    csv << num(p.lambda) << ',' << num(p.lambda_tv) << ',' << num(p.sre_db) << ',' << p.iterations
        << ',' << to_string(p.termination) << '\n';
  }
  if (!csv) throw Error(ErrorCode::IoError, "cannot write sweep.csv");
  const SweepPoint& best = best_point(points);
  std::ofstream bf(dir / "best.txt", std::ios::trunc);
  bf << "lambda = " << num(best.lambda) << "\nlambda_tv = " << num(best.lambda_tv)
     << "\nsre_db = " << num(best.sre_db) << "\n";
  out << "best lambda " << num(best.lambda) << " lambda_tv " << num(best.lambda_tv) << " SRE "
      << num(best.sre_db) << " dB over " << points.size() << " runs\n";
  return kOk;
}

int data_error_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConfigError: return kUsage;
    case ErrorCode::InexactSolve: return kDiverged;
    default: return kData;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse unmixing of hyperspectral cubes with total variation", "hsu"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-data", "write a synthetic library, cube and truth");
  gen.config.attach(*gen_cmd);
  gen_cmd->add_option("--out", gen.out, "output directory");
  gen_cmd->add_option("--rows", gen.rows, "grid rows n_r")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", gen.cols, "grid columns n_c")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--bands", gen.bands, "spectral bands L")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--signatures", gen.signatures, "library size m")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--q", gen.q, "active endmembers")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--coherence", gen.coherence, "target mutual coherence in [0, 1)");
  gen_cmd->add_option("--snr", gen.snr, "SNR in dB, or inf");
  gen_cmd->add_option("--noise", gen.noise, "white or correlated");
  gen_cmd->add_option("--field", gen.field, "dc1 or smooth");
  gen_cmd->add_option("--correlation-length", gen.correlation_length, "smooth field width");

  UnmixArgs un;
  auto* un_cmd = app.add_subcommand("unmix", "estimate abundances");
  un.config.attach(*un_cmd);
  un_cmd->add_option("--cube", un.cube, "L x n cube matrix")->required();
  un_cmd->add_option("--library", un.library, "L x m library matrix")->required();
  un_cmd->add_option("--out", un.out, "output directory");

  EvalArgs ev;
  auto* ev_cmd = app.add_subcommand("eval", "score an estimate against the truth");
  ev_cmd->add_option("--truth", ev.truth, "true abundances")->required();
  ev_cmd->add_option("--estimate", ev.estimate, "estimated abundances")->required();
  ev_cmd->add_option("--report", ev.report, "unmix report.txt (default: next to estimate)");
  ev_cmd->add_option("--out", ev.out, "directory for eval.json");
  ev_cmd->add_option("--threshold", ev.threshold, "success threshold on relative error power");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "grid search over (lambda, lambda_tv)");
  sw.config.attach(*sw_cmd);
  sw_cmd->add_option("--cube", sw.cube, "L x n cube matrix")->required();
  sw_cmd->add_option("--library", sw.library, "L x m library matrix")->required();
  sw_cmd->add_option("--truth", sw.truth, "true abundances")->required();
  sw_cmd->add_option("--out", sw.out, "output directory");
  sw_cmd->add_flag("--parallel", sw.parallel, "run grid points concurrently (HSU_THREADS)");
  sw_cmd->add_flag("--include-zero-tv", sw.include_zero_tv, "also try lambda_tv = 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return gen_data(gen, out);
    if (*un_cmd) return unmix(un, out);
    if (*ev_cmd) return eval(ev, out);
    if (*sw_cmd) return sweep(sw, out);
  } catch (const ConfigError& e) {
    err << "hsu: config error in key '" << e.key() << "': " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "hsu: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergedError& e) {
    err << "hsu: " << e.what() << "\n";
    return kDiverged;
  } catch (const Error& e) {
    err << "hsu: " << e.what() << "\n";
    return data_error_code(e.code());
  } catch (const std::exception& e) {
    err << "hsu: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hsu");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hsu::cli
