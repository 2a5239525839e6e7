#include "moran/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moran/errors.hpp"

namespace moran {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-2 pi i t) with t reduced to [-1/2, 1/2] first.
Complex unit(double t) {
  t -= std::nearbyint(t);
  return {std::cos(kTwoPi * t), -std::sin(kTwoPi * t)};
}

Complex mask_reduced(std::span<const std::int64_t> digits, double r, double y) {
  Complex sum = 0.0;
  for (const auto d : digits) {
    const double dd = static_cast<double>(d);
    double t = dd * r;
    t -= std::floor(t);
    sum += unit(t + dd * y);
  }
  return sum / static_cast<double>(digits.size());
}

}  // namespace

Complex mask_eval(const DigitSet& digits, double x) { return mask_reduced(digits.digits(), 0.0, x); }

Complex mask_eval(const DigitSet& digits, const Rational& r, double y) {
  return mask_reduced(digits.digits(), to_double(frac(r)), y);
}

DiscreteMeasure atoms(const MoranSystem& system, std::size_t n) {
  std::vector<Rational> current{Rational(0)};
  Integer P = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Level& lv = system.level(i);
    P *= lv.p;
    std::vector<Rational> next;
    next.reserve(current.size() * lv.phi());
    for (const auto d : lv.digits.digits()) {
      const Rational step = make_rational(d, P);
      for (const auto& x : current) next.push_back(x + step);
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  const auto dup = std::adjacent_find(current.begin(), current.end());
  if (dup != current.end()) {
    throw CollisionError("atoms of mu_" + std::to_string(n) + " collide at " + to_string(*dup) +
                         ": ill-posed system");
  }
  DiscreteMeasure out;
  out.weight = make_rational(1, static_cast<unsigned long>(current.size()));
  out.atoms = std::move(current);
  return out;
}

Complex fourier_level(const MoranSystem& system, std::size_t n, double xi) {
  Complex prod = 1.0;
  double P = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Level& lv = system.level(i);
    P *= static_cast<double>(lv.p);
    prod *= mask_eval(lv.digits, xi / P);
  }
  return prod;
}

Complex fourier_level(const MoranSystem& system, std::size_t n, const Rational& shift, double xi) {
  Complex prod = 1.0;
  Integer P = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Level& lv = system.level(i);
    P *= lv.p;
    prod *= mask_eval(lv.digits, shift / Rational(P), xi / to_double(P));
  }
  return prod;
}

double TailEstimate::lower_modulus() const {
  return std::max(0.0, std::abs(value) * (1.0 - omitted_deviation));
}

namespace {

double omitted_deviation(const MoranSystem& system, std::size_t end_level, double abs_xi) {
  if (system.is_finite() && end_level >= *system.max_level()) return 0.0;
  const double s = kTwoPi * abs_xi * to_double(system.tail_radius(end_level));
  return std::expm1(s);
}

}  // namespace

TailEstimate fourier_tail(const MoranSystem& system, std::size_t n, double xi, std::size_t depth) {
  return fourier_tail(system, n, Rational(0), xi, depth);
}

TailEstimate fourier_tail(const MoranSystem& system, std::size_t n, const Rational& shift,
                          double xi, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("fourier_tail: depth must be >= 1");
  Complex prod = 1.0;
  Integer P = system.P(n);
  const bool exact_shift = shift != 0;
  std::size_t last = n + depth;
  if (system.is_finite()) last = std::min(last, std::max(n, *system.max_level()));
  for (std::size_t i = n + 1; i <= last; ++i) {
    const Level& lv = system.level(i);
    P *= lv.p;
    const double inv = 1.0 / to_double(P);
    prod *= exact_shift ? mask_eval(lv.digits, shift / Rational(P), xi * inv)
                        : mask_eval(lv.digits, xi * inv);
  }
  const double abs_xi = std::abs(to_double(shift) + xi);
  return {prod, omitted_deviation(system, last, abs_xi)};
}

ShiftedProduct::ShiftedProduct(const MoranSystem& system, std::size_t first, std::size_t last,
                               std::span<const Rational> shifts)
    : shift_count_(shifts.size()) {
  if (first == 0) throw std::invalid_argument("ShiftedProduct: levels are 1-based");
  std::vector<Integer> P;
  Integer running = system.P(first - 1);
  for (std::size_t i = first; i <= last; ++i) {
    const Level& lv = system.level(i);
    running *= lv.p;
    P.push_back(running);
    const auto d = lv.digits.digits();
    levels_.push_back({std::vector<std::int64_t>(d.begin(), d.end()), 1.0 / to_double(running)});
  }
  frac_.reserve(shift_count_ * levels_.size());
  for (const auto& s : shifts) {
    for (const auto& Pi : P) frac_.push_back(to_double(frac(s / Rational(Pi))));
  }
}

Complex ShiftedProduct::eval(std::size_t shift_index, double xi) const {
  Complex prod = 1.0;
  const double* r = frac_.data() + shift_index * levels_.size();
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    prod *= mask_reduced(levels_[k].digits, r[k], xi * levels_[k].inv_P);
  }
  return prod;
}

double ShiftedProduct::sum_squares(double xi) const {
  double total = 0.0;
  for (std::size_t s = 0; s < shift_count_; ++s) total += std::norm(eval(s, xi));
  return total;
}

}  // namespace moran
