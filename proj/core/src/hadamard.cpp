#include "moran/hadamard.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "moran/errors.hpp"
#include "moran/rational.hpp"
#include "moran/zero_set.hpp"

namespace moran {

namespace {

// Inverse of a modulo m, gcd(a, m) == 1 assumed; result in [0, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::logic_error("inverse_mod: not invertible");
  return ((old_s % m) + m) % m;
}

Classification require_admissible(std::int64_t p, const DigitSet& digits) {
  Classification info = classify_level(p, digits);
  if (!info.admissible()) {
    std::string why;
    for (const auto& v : info.violations) why += (why.empty() ? "" : "; ") + v;
    throw AdmissibilityError("(" + std::to_string(p) + "," + digits.to_string() +
                             ") not admissible: " + why);
  }
  return info;
}

}  // namespace

std::vector<std::int64_t> construct_companion(std::int64_t p, const DigitSet& digits) {
  const Classification info = require_admissible(p, digits);
  switch (info.cls) {
    case DigitClass::T1: {
      std::vector<std::int64_t> out;
      for (std::int64_t k = 0; k < info.n; ++k) out.push_back(k * (p / info.n));
      return out;
    }
    case DigitClass::T2:
      return {0, p / 3, -(p / 3)};
    case DigitClass::T3: {
      const std::int64_t g = std::gcd(info.d, p);
      const std::int64_t two_m = p / g;
      const std::int64_t m = two_m / 2;
      const std::int64_t d2 = info.d / g;
      const std::int64_t ell = (m * inverse_mod(d2, two_m)) % two_m;
      return {0, ell};
    }
    case DigitClass::Invalid:
      break;
  }
  throw AdmissibilityError("not admissible");
}

HadamardTriple make_hadamard_triple(std::int64_t p, const DigitSet& digits) {
  HadamardTriple t;
  t.p = p;
  t.digits = digits;
  t.companion = construct_companion(p, digits);
  t.residual = unitarity_residual(p, digits, t.companion);
  return t;
}

double unitarity_residual(std::int64_t p, const DigitSet& digits,
                          std::span<const std::int64_t> companion) {
  const std::size_t n = digits.size();
  if (companion.size() != n) throw std::invalid_argument("unitarity_residual: #L != #D");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  // H[d][l], phases reduced exactly mod p.
  std::vector<std::complex<double>> H(n * n);
  const auto d = digits.digits();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Integer phase = mod(Integer(d[r]) * Integer(companion[c]), Integer(p));
      const double t = phase.get_d() / static_cast<double>(p);
      H[r * n + c] = std::polar(scale, -2.0 * std::numbers::pi * t);
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += std::conj(H[r * n + i]) * H[r * n + j];
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

bool is_hadamard(std::int64_t p, const DigitSet& digits, std::span<const std::int64_t> companion) {
  if (companion.size() != digits.size()) throw std::invalid_argument("is_hadamard: #L != #D");
  const Classification info = require_admissible(p, digits);
  for (std::size_t i = 0; i < companion.size(); ++i) {
    for (std::size_t j = i + 1; j < companion.size(); ++j) {
      const Rational x = make_rational(Integer(companion[i]) - Integer(companion[j]), Integer(p));
      if (!mask_zero_contains(info, x)) return false;
    }
  }
  return true;
}

}  // namespace moran
