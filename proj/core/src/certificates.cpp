#include "moran/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "moran/errors.hpp"
#include "moran/fourier.hpp"

namespace moran {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-9;
constexpr std::size_t kFiniteCheckLimit = 5000;

}  // namespace

Rational h_bound(const MoranSystem& system, std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) throw std::invalid_argument("h_bound: requires 1 <= k < n");
  Rational head = 1;
  for (std::size_t j = 1; j <= k; ++j) head /= static_cast<unsigned long>(system.phi(j));
  Rational mid = 1;
  for (std::size_t i = k + 1; i <= n - 1; ++i) mid /= static_cast<unsigned long>(system.phi(i));
  return mid * (head + 1);
}

Rational lambda_norm_check(const MoranSystem& system, std::size_t k, const Sigma& sigma) {
  if (k == 0) return 0;
  const auto [lo, hi] = SpectrumFactors(system, k, sigma).extremes();
  return std::max(abs(lo), abs(hi)) / Rational(system.P(k));
}

MaskParams MaskParams::from_level(const Level& level, double P) {
  MaskParams m;
  m.cls = level.cls();
  m.n = level.info.n;
  m.d = level.info.d;
  m.a = level.info.a;
  m.b = level.info.b;
  m.P = P;
  return m;
}

double mask_lower_bound(const MaskParams& m, double x) {
  switch (m.cls) {
    case DigitClass::T1: {
      const double t = static_cast<double>(m.n) * kPi * x / m.P;
      return 1.0 - t * t / 6.0;
    }
    case DigitClass::T3: {
      const double t = kPi * static_cast<double>(m.d) * x / m.P;
      return 1.0 - t * t / 2.0;
    }
    case DigitClass::T2: {
      const double s = kPi * static_cast<double>(m.a + m.b) * x / m.P;
      const double t = kPi * static_cast<double>(m.a - m.b) * x / m.P;
      return std::abs(std::cos(s) + 2.0 * std::cos(t)) / 3.0;
    }
    case DigitClass::Invalid:
      break;
  }
  throw std::invalid_argument("mask_lower_bound: unknown class");
}

double f_eval(double x, double y) { return std::cos(x) * std::cos(y) * std::cos(x - y); }

FMinimum f_min_points() {
  constexpr double a = kPi / 3.0;
  constexpr double b = 2.0 * kPi / 3.0;
  return {-0.125,
          {{{-b, b}, {-a, a}, {a, -a}, {b, -b}, {b, a}, {a, b}, {-b, -a}, {-a, -b}}}};
}

GridMinimum grid_minimize_f(double x_lo, double x_hi, double y_lo, double y_hi,
                            std::size_t resolution, double tolerance) {
  if (resolution < 2) throw std::invalid_argument("grid_minimize_f: resolution must be >= 2");
  const std::size_t n = resolution;
  GridMinimum out;
  out.spacing_x = (x_hi - x_lo) / static_cast<double>(n - 1);
  out.spacing_y = (y_hi - y_lo) / static_cast<double>(n - 1);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x_lo + out.spacing_x * static_cast<double>(i);
    ys[i] = y_lo + out.spacing_y * static_cast<double>(i);
  }
  std::vector<double> v(n * n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double f = f_eval(xs[i], ys[j]);
      v[i * n + j] = f;
      best = std::min(best, f);
    }
  }
  out.value = best;

  const double spacing = std::max(out.spacing_x, out.spacing_y);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double f = v[i * n + j];
      if (f > best + tolerance) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const auto ii = static_cast<std::ptrdiff_t>(i) + di;
          const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(n) ||
              jj >= static_cast<std::ptrdiff_t>(n)) {
            continue;
          }
          if (v[static_cast<std::size_t>(ii) * n + static_cast<std::size_t>(jj)] < f) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      const bool duplicate =
          std::any_of(out.argmins.begin(), out.argmins.end(), [&](const auto& q) {
            return std::hypot(q.first - xs[i], q.second - ys[j]) < 2.5 * spacing;
          });
      if (!duplicate) out.argmins.emplace_back(xs[i], ys[j]);
    }
  }
  return out;
}

double tail_constant(std::size_t n_k) {
  if (n_k < 7) throw std::invalid_argument("tail_constant: requires n_k >= 7");
  double product = 1.0;
  for (std::size_t i = n_k + 2;; ++i) {
    const double t = 43.0 * kPi / (96.0 * std::ldexp(1.0, static_cast<int>(i) - 9));
    const double factor = 1.0 - 0.5 * t * t;
    product *= factor;
    if (factor > 1.0 - 1e-15) break;
  }
  return product;
}

double epsilon_next_level(const MoranSystem& system, std::size_t n_k, const Sigma& sigma) {
  const Level& next = system.level(n_k + 1);
  if (next.phi() == 2) {
    throw std::invalid_argument("epsilon_next_level: subsequence must select Phi >= 3");
  }
  switch (next.cls()) {
    case DigitClass::T1: {
      const double t = 3.0 * kPi / 4.0;
      return 1.0 - t * t / 6.0;
    }
    case DigitClass::T2: {
      // The box below relies on |lambda| / P_{n_k} <= 1.
      if (lambda_norm_check(system, n_k, sigma) > 1) {
        throw std::logic_error("epsilon_next_level: |lambda|/P_k exceeds 1");
      }
      const double ratio =
          static_cast<double>(next.info.b) / static_cast<double>(next.p);
      const double l_prime = (1.0 + std::ldexp(1.0, -static_cast<int>(n_k))) * ratio;
      const double edge = l_prime * kPi;
      constexpr std::size_t kResolution = 1001;
      const GridMinimum g = grid_minimize_f(0.0, edge, 0.0, edge, kResolution, 0.0);
      const double h = edge / static_cast<double>(kResolution - 1);
      // |grad(1 + 8f)| <= 8 sqrt(2); every point lies within h / sqrt(2) of a node.
      const double certified = std::max(0.0, 1.0 + 8.0 * g.value - 8.0 * h);
      return std::sqrt(certified / 9.0);
    }
    case DigitClass::T3:
    case DigitClass::Invalid:
      break;
  }
  throw AdmissibilityError("epsilon_next_level: level " + std::to_string(n_k + 1) +
                           " is not admissible");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::ConditionsFailed: return "CONDITIONS_FAILED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

std::string num(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

std::string describe(const Level& lv) {
  return "(" + std::to_string(lv.p) + "," + lv.digits.to_string() + ")";
}

void collect_violations(const MoranSystem& system, Certificate& cert) {
  auto scan = [&cert](const std::vector<Level>& levels, const char* where) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const Level& lv = levels[i];
      if (lv.info.admissible()) continue;
      std::string msg = std::string(where) + " entry " + std::to_string(i + 1) + " " + describe(lv) + ":";
      for (const auto& v : lv.info.violations) msg += " [" + v + "]";
      cert.diagnostics.push_back(msg);
    }
  };
  scan(system.preamble(), "preamble");
  scan(system.cycle(), "cycle");
}

void certify_infinite_case(const MoranSystem& system, const CertifyOptions& opt,
                           Certificate& cert) {
  std::vector<std::size_t> subsequence;
  for (std::size_t n = 7; n <= opt.scan_levels; ++n) {
    if (system.phi(n + 1) >= 3) subsequence.push_back(n);
  }
  if (subsequence.empty()) {
    cert.diagnostics.push_back("no n_k >= 7 with Phi(n_k+1) >= 3 in [7, " +
                               std::to_string(opt.scan_levels) + "]");
    cert.verdict = Verdict::Inconclusive;
    return;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit_xi(-1.0, 1.0);
  bool all_hold = true;
  for (const std::size_t n_k : subsequence) {
    TailCheck check;
    check.n_k = n_k;
    check.tail_constant = tail_constant(n_k);
    check.epsilon_next = epsilon_next_level(system, n_k, opt.sigma);
    check.epsilon = check.tail_constant * check.epsilon_next;
    if (!(check.epsilon >= kTiny)) {
      const Level& next = system.level(n_k + 1);
      std::string why = "n_k=" + std::to_string(n_k) + ": eps = C0 * eps' = " +
                        num(check.epsilon) + " below 1e-9";
      if (!next.info.warnings.empty()) why += " (next level " + describe(next) + " boundary-ratio)";
      cert.diagnostics.push_back(why);
      cert.checks.push_back(check);
      cert.verdict = Verdict::Inconclusive;
      return;
    }

    const SpectrumFactors factors(system, n_k, opt.sigma);
    const auto [lo, hi] = factors.extremes();
    std::vector<std::pair<Rational, double>> probes;
    constexpr double kEdge = 1.0 - 1e-12;
    probes.emplace_back(hi, kEdge);
    probes.emplace_back(lo, -kEdge);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Rational lambda = factors.sample(rng);
      probes.emplace_back(lambda, unit_xi(rng));
    }
    double min_seen = std::numeric_limits<double>::infinity();
    for (const auto& [lambda, xi] : probes) {
      const TailEstimate tail = fourier_tail(system, n_k, lambda, xi, opt.depth);
      const double lower = tail.lower_modulus();
      min_seen = std::min(min_seen, lower);
      if (lower < check.epsilon) all_hold = false;
    }
    check.min_observed = min_seen;
    check.samples = probes.size();
    cert.checks.push_back(check);
    if (!all_hold) {
      cert.diagnostics.push_back("n_k=" + std::to_string(n_k) + ": sampled tail " +
                                 num(min_seen) + " below eps " + num(check.epsilon));
    }
  }
  cert.verdict = all_hold ? Verdict::Pass : Verdict::Inconclusive;
}

void certify_finite_case(const MoranSystem& system, const CertifyOptions& opt, Certificate& cert) {
  const std::size_t N = system.preamble().size();
  if (system.atom_count(N) > static_cast<unsigned long>(kFiniteCheckLimit)) {
    cert.diagnostics.push_back("Lambda_" + std::to_string(N) + " exceeds " +
                               std::to_string(kFiniteCheckLimit) + " points; finite check skipped");
    cert.verdict = Verdict::Inconclusive;
    return;
  }
  const SpectrumLevel spectrum = level_spectrum(system, N, opt.sigma);
  const OrthogonalityReport ortho = check_orthogonal(system, spectrum);
  if (!ortho.ok()) {
    cert.diagnostics.push_back("Lambda_" + std::to_string(N) + " not orthogonal for mu_N");
    cert.verdict = Verdict::Inconclusive;
    return;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> xi_dist(-5.0, 5.0);
  std::vector<double> xis(32);
  for (auto& x : xis) x = xi_dist(rng);
  double worst = 0.0;
  for (const double q : q_sum_finite(system, N, spectrum.points, xis)) {
    worst = std::max(worst, std::abs(q - 1.0));
  }
  if (worst > 1e-9) {
    cert.diagnostics.push_back("Q-sum of Lambda_N deviates from 1 by " + num(worst));
    cert.verdict = Verdict::Inconclusive;
    return;
  }
  for (const Level& lv : system.cycle()) {
    const std::int64_t g = std::gcd(lv.info.d, lv.p);
    if (lv.phi() != 2 || (lv.p / g) % 2 != 0) {
      cert.diagnostics.push_back("tail level " + describe(lv) + " fails 2 | p/gcd(d,p)");
      cert.verdict = Verdict::Inconclusive;
      return;
    }
  }
  cert.diagnostics.push_back("Lambda_" + std::to_string(N) + " exact spectrum of mu_" +
                             std::to_string(N) + " (" + std::to_string(spectrum.points.size()) +
                             " points, max |Q-1| = " + num(worst) +
                             "); two-digit tail satisfies 2 | p/gcd(d,p)");
  cert.verdict = Verdict::Pass;
}

}  // namespace

Certificate certify(const MoranSystem& system, const CertifyOptions& options) {
  Certificate cert;
  cert.system = system.name();
  cert.sigma = options.sigma;
  if (!system.all_admissible()) {
    collect_violations(system, cert);
    cert.verdict = Verdict::ConditionsFailed;
    return cert;
  }
  if (system.cycle_has_large_digit_set()) {
    cert.spectral_case = 1;
    certify_infinite_case(system, options, cert);
  } else {
    cert.spectral_case = 2;
    certify_finite_case(system, options, cert);
  }
  return cert;
}

}  // namespace moran
