#include "moran/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moran/errors.hpp"
#include "moran/zero_set.hpp"

namespace moran {

Sigma::Sigma(std::vector<int> prefix, int fill) : prefix_(std::move(prefix)), fill_(fill) {
  auto bad = [](int s) { return s != 1 && s != -1; };
  if (bad(fill_) || std::any_of(prefix_.begin(), prefix_.end(), bad)) {
    throw std::invalid_argument("sigma entries must be +1 or -1");
  }
}

Sigma Sigma::parse(std::string_view text) {
  std::vector<int> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      std::string tok(text.substr(start, end - start));
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok == "1" || tok == "+1") {
        out.push_back(1);
      } else if (tok == "-1") {
        out.push_back(-1);
      } else {
        throw std::invalid_argument("bad sigma entry '" + tok + "'");
      }
      start = end + 1;
    }
    return Sigma(std::move(out));
  }
  for (const char c : text) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("bad sigma character '") + c + "'");
    }
  }
  return Sigma(std::move(out));
}

int Sigma::operator()(std::size_t level) const {
  if (level >= 1 && level <= prefix_.size()) return prefix_[level - 1];
  return fill_;
}

std::string Sigma::to_string() const {
  std::string out;
  for (const int s : prefix_) out += s > 0 ? '+' : '-';
  out += fill_ > 0 ? "(+)" : "(-)";
  return out;
}

std::vector<std::int64_t> digit_star(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("digit_star: N must be >= 1");
  std::vector<std::int64_t> out;
  const std::int64_t lo = -(n / 2);
  for (std::int64_t k = 0; k < n; ++k) out.push_back(lo + k);
  return out;
}

SpectrumFactors::SpectrumFactors(const MoranSystem& system, std::size_t n, const Sigma& sigma) {
  Integer P = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Level& lv = system.level(i);
    P *= lv.p;
    const Rational Pq(P);
    std::vector<Rational> f{Rational(0)};
    switch (lv.cls()) {
      case DigitClass::T3: {
        Integer pow2 = 1;
        pow2 <<= static_cast<unsigned long>(1 + lv.info.l);
        f.push_back(Pq * make_rational(sigma(i), pow2));
        break;
      }
      case DigitClass::T2:
        f.push_back(Pq / 3);
        f.push_back(-Pq / 3);
        break;
      case DigitClass::T1:
        f.clear();
        for (const auto g : digit_star(lv.info.n)) f.push_back(Pq * make_rational(g, lv.info.n));
        break;
      case DigitClass::Invalid:
        throw AdmissibilityError("level " + std::to_string(i) + " (" + std::to_string(lv.p) + "," +
                                 lv.digits.to_string() + ") is not (T1)-(T3) admissible");
    }
    factors_.push_back(std::move(f));
  }
}

Integer SpectrumFactors::cardinality() const {
  Integer c = 1;
  for (const auto& f : factors_) c *= static_cast<unsigned long>(f.size());
  return c;
}

std::pair<Rational, Rational> SpectrumFactors::extremes() const {
  Rational lo = 0, hi = 0;
  for (const auto& f : factors_) {
    const auto [mn, mx] = std::minmax_element(f.begin(), f.end());
    lo += *mn;
    hi += *mx;
  }
  return {lo, hi};
}

Rational SpectrumFactors::sample(std::mt19937_64& rng) const {
  Rational out = 0;
  for (const auto& f : factors_) {
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    out += f[pick(rng)];
  }
  return out;
}

SpectrumLevel level_spectrum(const MoranSystem& system, std::size_t n, const Sigma& sigma) {
  const SpectrumFactors factors(system, n, sigma);
  std::vector<Rational> points{Rational(0)};
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = factors.factor(i);
    std::vector<Rational> next;
    next.reserve(points.size() * f.size());
    for (const auto& a : f) {
      for (const auto& x : points) next.push_back(x + a);
    }
    points = std::move(next);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (Integer(static_cast<unsigned long>(points.size())) != factors.cardinality()) {
    throw CollisionError("spectrum level " + std::to_string(n) + " has " +
                         std::to_string(points.size()) + " distinct points, expected " +
                         to_string(factors.cardinality()));
  }
  return {n, sigma, std::move(points)};
}

OrthogonalityReport check_orthogonal(const MoranSystem& system, std::span<const Rational> points,
                                     std::size_t max_level) {
  OrthogonalityReport report;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ++report.pairs_checked;
      if (!zero_set_contains(system, points[j] - points[i], max_level)) {
        report.failures.emplace_back(points[i], points[j]);
      }
    }
  }
  return report;
}

OrthogonalityReport check_orthogonal(const MoranSystem& system, const SpectrumLevel& spectrum) {
  return check_orthogonal(system, spectrum.points, spectrum.level);
}

double q_sum_finite(const MoranSystem& system, std::size_t n, std::span<const Rational> points,
                    double xi) {
  return ShiftedProduct(system, 1, n, points).sum_squares(xi);
}

std::vector<double> q_sum_finite(const MoranSystem& system, std::size_t n,
                                 std::span<const Rational> points, std::span<const double> xis) {
  const ShiftedProduct product(system, 1, n, points);
  std::vector<double> out;
  out.reserve(xis.size());
  for (const double xi : xis) out.push_back(product.sum_squares(xi));
  return out;
}

double q_partial(const MoranSystem& system, std::span<const Rational> points, std::size_t depth,
                 double xi) {
  return ShiftedProduct(system, 1, depth, points).sum_squares(xi);
}

std::vector<double> q_partial(const MoranSystem& system, std::span<const Rational> points,
                              std::size_t depth, std::span<const double> xis) {
  return q_sum_finite(system, depth, points, xis);
}

double exponential_matrix_residual(const DiscreteMeasure& measure, std::span<const Rational> points) {
  const std::size_t q = points.size();
  if (measure.atoms.size() != q) {
    throw std::invalid_argument("exponential_matrix_residual: #atoms != #points");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Complex> H(q * q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      const double t = to_double(frac(points[c] * measure.atoms[r]));
      H[r * q + c] = std::polar(scale, -2.0 * std::numbers::pi * t);
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      Complex s = 0.0;
      for (std::size_t r = 0; r < q; ++r) s += std::conj(H[r * q + i]) * H[r * q + j];
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

}  // namespace moran
