#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "moran/certificates.hpp"
#include "moran/density.hpp"
#include "moran/errors.hpp"
#include "moran/hadamard.hpp"
#include "moran/spectrum.hpp"
#include "moran/system.hpp"
#include "moran/tiling.hpp"

namespace moran::cli {

namespace {

constexpr int kCsvPrecision = 15;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string system;
  std::string sigma;
  std::size_t level = 6;
  std::size_t depth = 30;
  std::size_t bins = 4096;
  std::size_t samples = 200;
  std::size_t tiling_samples = 10000;
  std::size_t grid = 200;
  std::size_t scan_levels = 12;
  double tol = 1e-9;
  double uniformity_tol = 0.05;
  double xi_min = -5.0;
  double xi_max = 5.0;
  std::uint64_t seed = 20240101;
  std::int64_t window = 0;
  std::string mode = "spread";
  std::string output;
  std::string data_dir;
  bool partial = false;
};

Sigma parse_sigma(const std::string& text) {
  try {
    return Sigma::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--sigma: ") + e.what());
  }
}

// CSV goes to the -o file when given, otherwise to `out` with every report
// line turned into a '#' comment.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(out) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw FileError("cannot write " + path);
      *file_ << std::setprecision(kCsvPrecision);
    }
  }
  std::ostream& csv() { return file_ ? *file_ : out_; }
  std::string prefix() const { return file_ ? "" : "# "; }

 private:
  std::ostream& out_;
  std::unique_ptr<std::ofstream> file_;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string list(std::span<const std::int64_t> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

MoranSystem load(const Options& o) { return load_system(o.system); }

int cmd_validate(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  out << "system: " << system.name() << "\n";
  out << "preamble: " << system.preamble().size() << " levels, cycle: " << system.cycle().size()
      << " levels\n";
  out << std::left << std::setw(10) << "section" << std::setw(5) << "n" << std::setw(8) << "p"
      << std::setw(24) << "D" << std::setw(9) << "class" << std::setw(5) << "Phi"
      << "notes\n";
  auto row = [&](const char* section, std::size_t n, const Level& lv) {
    std::vector<std::string> notes = lv.info.warnings;
    notes.insert(notes.end(), lv.info.violations.begin(), lv.info.violations.end());
    out << std::setw(10) << section << std::setw(5) << n << std::setw(8) << lv.p << std::setw(24)
        << lv.digits.to_string() << std::setw(9) << to_string(lv.cls()) << std::setw(5)
        << lv.phi() << join(notes, "; ") << "\n";
  };
  std::size_t n = 0;
  for (const auto& lv : system.preamble()) row("preamble", ++n, lv);
  for (const auto& lv : system.cycle()) row("cycle", ++n, lv);
  out << std::right;
  out << "admissible: " << (system.all_admissible() ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  const Sigma sigma = parse_sigma(o.sigma);
  const SpectrumLevel spectrum = level_spectrum(system, o.level, sigma);
  out << "system: " << system.name() << "\n";
  out << "level: " << o.level << ", sigma: " << sigma.to_string() << "\n";
  out << "points: " << spectrum.points.size() << "\n";
  out << "min: " << to_string(spectrum.points.front())
      << ", max: " << to_string(spectrum.points.back()) << "\n";
  out << "max |lambda| / P_n: " << to_string(lambda_norm_check(system, o.level, sigma)) << "\n";
  if (!o.output.empty()) {
    Sink sink(o.output, out);
    sink.csv() << "lambda,value\n";
    for (const auto& p : spectrum.points) sink.csv() << to_string(p) << "," << to_double(p) << "\n";
    out << "csv: " << o.output << "\n";
  } else {
    std::vector<std::string> pts;
    pts.reserve(spectrum.points.size());
    for (const auto& p : spectrum.points) pts.push_back(to_string(p));
    out << "{" << join(pts, ", ") << "}\n";
  }
  return kExitOk;
}

int cmd_ortho(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  const Sigma sigma = parse_sigma(o.sigma);
  const SpectrumLevel spectrum = level_spectrum(system, o.level, sigma);
  const OrthogonalityReport report = check_orthogonal(system, spectrum);
  out << "system: " << system.name() << "\n";
  out << "level: " << o.level << ", sigma: " << sigma.to_string() << "\n";
  out << "points: " << spectrum.points.size() << ", pairs: " << report.pairs_checked << "\n";
  out << "failures: " << report.failures.size() << "\n";
  const std::size_t shown = std::min<std::size_t>(report.failures.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& [a, b] = report.failures[i];
    out << "  " << to_string(a) << " - " << to_string(b) << " = " << to_string(b - a)
        << " not in the zero set\n";
  }
  out << "orthogonal: " << (report.ok() ? "yes" : "no") << "\n";
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_qsum(const Options& o, std::ostream& out) {
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(o.xi_max > o.xi_min)) throw UsageError("--xi-max must exceed --xi-min");
  const MoranSystem system = load(o);
  const Sigma sigma = parse_sigma(o.sigma);
  const SpectrumLevel spectrum = level_spectrum(system, o.level, sigma);
  std::vector<double> xis(o.grid);
  for (std::size_t i = 0; i < o.grid; ++i) {
    xis[i] = o.xi_min + (o.xi_max - o.xi_min) * static_cast<double>(i) /
                            static_cast<double>(o.grid - 1);
  }
  const std::vector<double> q = o.partial ? q_partial(system, spectrum.points, o.depth, xis)
                                          : q_sum_finite(system, o.level, spectrum.points, xis);
  double worst = 0.0, top = 0.0;
  for (const double v : q) {
    worst = std::max(worst, std::abs(v - 1.0));
    top = std::max(top, v);
  }
  Sink sink(o.output, out);
  const std::string pre = sink.prefix();
  out << pre << "system: " << system.name() << "\n";
  out << pre << "level: " << o.level << ", sigma: " << sigma.to_string()
      << ", points: " << spectrum.points.size() << "\n";
  out << pre << "measure: "
      << (o.partial ? "mu truncated at depth " + std::to_string(o.depth)
                    : "mu_" + std::to_string(o.level))
      << "\n";
  out << pre << "max Q: " << top << ", max |Q-1|: " << worst << "\n";
  out << pre << "within tol " << o.tol << ": " << (worst <= o.tol ? "yes" : "no") << "\n";
  sink.csv() << std::setprecision(kCsvPrecision) << "xi,Q\n";
  for (std::size_t i = 0; i < xis.size(); ++i) sink.csv() << xis[i] << "," << q[i] << "\n";
  return kExitOk;
}

int cmd_hadamard(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  out << "system: " << system.name() << "\n";
  std::vector<const Level*> seen;
  auto add = [&](const Level& lv) {
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const Level* s) {
      return s->p == lv.p && s->digits == lv.digits;
    });
    if (!dup) seen.push_back(&lv);
  };
  for (const auto& lv : system.preamble()) add(lv);
  for (const auto& lv : system.cycle()) add(lv);
  bool all_ok = true;
  for (const Level* lv : seen) {
    out << "(" << lv->p << "," << lv->digits.to_string() << ") " << to_string(lv->cls()) << ": ";
    if (!lv->info.admissible()) {
      out << "not admissible\n";
      continue;
    }
    const HadamardTriple t = make_hadamard_triple(lv->p, lv->digits);
    const bool exact = is_hadamard(lv->p, lv->digits, t.companion);
    all_ok = all_ok && exact;
    out << "L = " << list(t.companion) << ", residual = " << t.residual
        << ", exact = " << (exact ? "yes" : "no") << "\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  CertifyOptions opt;
  opt.sigma = parse_sigma(o.sigma);
  opt.scan_levels = o.scan_levels;
  opt.samples = o.samples;
  opt.depth = o.depth;
  opt.seed = o.seed;
  const Certificate cert = certify(system, opt);
  out << "system: " << cert.system << "\n";
  out << "sigma: " << cert.sigma.to_string() << "\n";
  out << "seed: " << o.seed << "\n";
  if (cert.spectral_case == 1) {
    out << "case: 1 (infinitely many levels with Phi >= 3)\n";
  } else if (cert.spectral_case == 2) {
    out << "case: 2 (finitely many levels with Phi >= 3)\n";
  }
  if (!cert.checks.empty()) {
    out << std::setw(5) << "n_k" << std::setw(22) << "C0" << std::setw(22) << "eps'"
        << std::setw(22) << "eps" << std::setw(22) << "min observed" << std::setw(9)
        << "samples" << "\n";
    for (const auto& c : cert.checks) {
      out << std::setw(5) << c.n_k << std::setw(22) << c.tail_constant << std::setw(22)
          << c.epsilon_next << std::setw(22) << c.epsilon << std::setw(22) << c.min_observed
          << std::setw(9) << c.samples << "\n";
    }
  }
  for (const auto& d : cert.diagnostics) out << "note: " << d << "\n";
  out << "verdict: " << to_string(cert.verdict) << "\n";
  switch (cert.verdict) {
    case Verdict::Pass: return kExitOk;
    case Verdict::ConditionsFailed: return kExitConditionsFailed;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

int cmd_density(const Options& o, std::ostream& out) {
  HistogramMode mode;
  if (o.mode == "spread") {
    mode = HistogramMode::Spread;
  } else if (o.mode == "atoms") {
    mode = HistogramMode::Atoms;
  } else {
    throw UsageError("--mode must be 'spread' or 'atoms'");
  }
  const MoranSystem system = load(o);
  const DensityReport r = analyze_density(system, o.level, o.bins, o.uniformity_tol, mode);
  Sink sink(o.output, out);
  const std::string pre = sink.prefix();
  const Histogram& h = r.histogram;
  out << pre << "system: " << system.name() << "\n";
  out << pre << "level: " << o.level << ", bins: " << h.bins() << ", mode: " << o.mode << "\n";
  out << pre << "box: [" << to_string(h.lo) << ", " << to_string(h.hi)
      << "], bin width: " << h.bin_width << "\n";
  out << pre << "total mass: " << h.total_mass() << ", integral: " << h.integral() << "\n";
  out << pre << "empty fraction: " << r.diagnostics.empty_fraction
      << ", relative stddev: " << r.diagnostics.relative_stddev
      << ", max density: " << r.diagnostics.max_density << "\n";
  out << pre << "Phi(n) = p_n at every level: " << (r.full_digit_sets ? "yes" : "no") << "\n";
  out << pre << "uniform within " << o.uniformity_tol << ": " << (r.uniform ? "yes" : "no") << "\n";
  out << pre << "verdict: " << r.verdict << "\n";
  sink.csv() << std::setprecision(kCsvPrecision) << "center,density\n";
  for (std::size_t i = 0; i < h.bins(); ++i) sink.csv() << h.center(i) << "," << h.density[i] << "\n";
  return kExitOk;
}

int cmd_tiling(const Options& o, std::ostream& out) {
  const MoranSystem system = load(o);
  const IntervalUnion cover = support_cover(system, o.level);
  const std::int64_t window =
      o.window > 0 ? o.window : floor(cover.diameter()).get_si() + 1;
  const TilingReport r = tiling_check(cover, window, o.tiling_samples);
  const IntervalUnion hull({{cover.min(), cover.max()}});
  out << "system: " << system.name() << "\n";
  out << "level: " << o.level << ", R_level = " << to_string(system.tail_radius(o.level)) << "\n";
  out << "support cover: " << cover.size() << " intervals, length " << to_string(cover.length())
      << ", hull [" << to_string(cover.min()) << ", " << to_string(cover.max()) << "]\n";
  out << "Hausdorff distance to hull: " << to_string(hausdorff_distance(cover, hull)) << "\n";
  if (cover.size() <= 8) out << "cover: " << cover.to_string() << "\n";
  out << "window: " << window << ", samples: " << r.samples << ", evaluated: " << r.evaluated
      << ", boundary hits: " << r.boundary_hits << "\n";
  if (r.first_failure) {
    out << "failures: " << r.failures << ", first at x = " << to_string(*r.first_failure)
        << " with count " << r.first_failure_count << "\n";
  }
  out << "tiles R by Z: " << (r.tiles ? "yes" : "no") << "\n";
  return r.tiles ? kExitOk : kExitFailure;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const std::vector<CorpusEntry> entries =
      o.data_dir.empty() ? corpus() : load_corpus(o.data_dir);
  out << "seed: " << o.seed << "\n";
  const auto outcomes = run_corpus(entries, o.seed);
  std::size_t w_name = 7, w_check = 5, w_exp = 8;
  for (const auto& r : outcomes) {
    w_name = std::max(w_name, r.example.size());
    w_check = std::max(w_check, r.check.size());
    w_exp = std::max(w_exp, r.expected.size());
  }
  out << std::left << std::setw(static_cast<int>(w_name + 2)) << "example"
      << std::setw(static_cast<int>(w_check + 2)) << "check"
      << std::setw(static_cast<int>(w_exp + 2)) << "expected" << "observed\n";
  bool all_ok = true;
  for (const auto& r : outcomes) {
    all_ok = all_ok && r.ok;
    out << std::setw(static_cast<int>(w_name + 2)) << r.example
        << std::setw(static_cast<int>(w_check + 2)) << r.check
        << std::setw(static_cast<int>(w_exp + 2)) << r.expected << r.observed
        << (r.ok ? "" : "  MISMATCH") << "\n";
  }
  out << std::right;
  out << (all_ok ? "all examples reproduced" : "some examples differ") << "\n";
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Moran measures: spectra, certificates, densities and tilings", "moran"};
  app.require_subcommand(1);

  auto system_arg = [&o](CLI::App* sub) {
    sub->add_option("system", o.system, "System file (.moran)")->required();
  };
  auto sigma_opt = [&o](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "Sign prefix, e.g. +-+ or 1,-1,1 (default all +1)");
  };
  auto level_opt = [&o](CLI::App* sub) {
    sub->add_option("--level", o.level, "Level n")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto output_opt = [&o](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "CSV output path");
  };

  auto* validate = app.add_subcommand("validate", "Per-level classification table");
  system_arg(validate);

  auto* spectrum = app.add_subcommand("spectrum", "Finite-level spectrum Lambda_n");
  system_arg(spectrum);
  level_opt(spectrum);
  sigma_opt(spectrum);
  output_opt(spectrum);

  auto* ortho = app.add_subcommand("ortho", "Exact pairwise orthogonality of Lambda_n");
  system_arg(ortho);
  level_opt(ortho);
  sigma_opt(ortho);

  auto* qsum = app.add_subcommand("qsum", "Q-sum of Lambda_n on a grid of xi");
  system_arg(qsum);
  level_opt(qsum);
  sigma_opt(qsum);
  output_opt(qsum);
  qsum->add_option("--grid", o.grid, "Number of grid points")->capture_default_str()
      ->check(CLI::PositiveNumber);
  qsum->add_option("--xi-min", o.xi_min, "Grid start")->capture_default_str();
  qsum->add_option("--xi-max", o.xi_max, "Grid end")->capture_default_str();
  qsum->add_flag("--partial", o.partial, "Use the measure truncated at --depth instead of mu_n");
  qsum->add_option("--depth", o.depth, "Truncation depth for --partial")->capture_default_str()
      ->check(CLI::PositiveNumber);
  qsum->add_option("--tol", o.tol, "Tolerance for |Q - 1|")->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* hadamard = app.add_subcommand("hadamard", "Hadamard triple of every distinct level");
  system_arg(hadamard);

  auto* cert = app.add_subcommand("certify", "Spectrality certificate (exit 0 / 2 / 3)");
  system_arg(cert);
  sigma_opt(cert);
  cert->add_option("--samples", o.samples, "Sampled (xi, lambda) pairs per n_k")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cert->add_option("--depth", o.depth, "Explicit tail levels before the remainder bound")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cert->add_option("--scan-levels", o.scan_levels, "Largest n_k considered")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cert->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* density = app.add_subcommand("density", "Density histogram and uniformity verdict");
  system_arg(density);
  level_opt(density);
  output_opt(density);
  density->add_option("--bins", o.bins, "Histogram bins")->capture_default_str()
      ->check(CLI::PositiveNumber);
  density->add_option("--mode", o.mode, "spread or atoms")->capture_default_str();
  density->add_option("--uniformity-tol", o.uniformity_tol, "Relative tolerance for uniformity")
      ->capture_default_str()->check(CLI::PositiveNumber);

  auto* tiling = app.add_subcommand("tiling", "Does the support cover tile R by Z?");
  system_arg(tiling);
  level_opt(tiling);
  tiling->add_option("--window", o.window, "Translates k in [-window, window] (default auto)")
      ->check(CLI::PositiveNumber);
  tiling->add_option("--samples", o.tiling_samples, "Sample points in [0, 1)")
      ->capture_default_str()->check(CLI::PositiveNumber);

  auto* examples = app.add_subcommand("examples", "Run the built-in example corpus");
  examples->add_option("--data-dir", o.data_dir, "Read the corpus from this directory instead");
  examples->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  out << std::setprecision(kCsvPrecision);
  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (ortho->parsed()) return cmd_ortho(o, out);
    if (qsum->parsed()) return cmd_qsum(o, out);
    if (hadamard->parsed()) return cmd_hadamard(o, out);
    if (cert->parsed()) return cmd_certify(o, out);
    if (density->parsed()) return cmd_density(o, out);
    if (tiling->parsed()) return cmd_tiling(o, out);
    if (examples->parsed()) return cmd_examples(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFileError;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const StructureError& e) {
    err << "invalid system: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace moran::cli
