#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"
#include "moran/system.hpp"

namespace moran::testkit {

inline constexpr double kPi = std::numbers::pi;

struct RawLevel {
  std::int64_t p;
  std::vector<std::int64_t> digits;
};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// D = {0..N-1}, N | p, p > N.
inline RawLevel random_t1(std::mt19937_64& rng, std::int64_t max_n = 12, std::int64_t max_k = 6) {
  const std::int64_t n = uniform(rng, 4, max_n);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  std::iota(d.begin(), d.end(), 0);
  return {n * uniform(rng, 2, max_k), d};
}

// D = {0,a,b}, gcd(a,b) = 1, {a,b} = {1,2} mod 3, 3 | p, b/p < 2/3.
inline RawLevel random_t2(std::mt19937_64& rng, std::int64_t max_b = 20) {
  for (;;) {
    const std::int64_t b = uniform(rng, 2, max_b);
    const std::int64_t a = uniform(rng, 1, b - 1);
    if (std::gcd(a, b) != 1) continue;
    if ((a % 3) + (b % 3) != 3) continue;
    // smallest multiple of 3 with 3b < 2p
    const std::int64_t k0 = (3 * b) / 6 + 1;
    const std::int64_t p = 3 * uniform(rng, k0, k0 + 5);
    if (3 * b >= 2 * p) continue;
    return {p, {0, a, b}};
  }
}

// D = {0,d}, 0 < d < p, 2 | p / gcd(d, p).
inline RawLevel random_t3(std::mt19937_64& rng, std::int64_t max_p = 64) {
  for (;;) {
    const std::int64_t p = uniform(rng, 2, max_p);
    const std::int64_t d = uniform(rng, 1, p - 1);
    if ((p / std::gcd(d, p)) % 2 == 0) return {p, {0, d}};
  }
}

inline RawLevel random_admissible(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: return random_t1(rng, 6, 3);
    case 1: return random_t2(rng, 8);
    default: return random_t3(rng, 16);
  }
}

inline Level to_level(const RawLevel& r) { return Level(r.p, DigitSet(r.digits)); }

// Preamble of 0-2 and cycle of 1-2 small admissible levels.
inline MoranSystem random_system(std::mt19937_64& rng) {
  std::vector<Level> pre, cyc;
  const auto np = uniform(rng, 0, 2);
  const auto nc = uniform(rng, 1, 2);
  for (std::int64_t i = 0; i < np; ++i) pre.push_back(to_level(random_admissible(rng)));
  for (std::int64_t i = 0; i < nc; ++i) cyc.push_back(to_level(random_admissible(rng)));
  return MoranSystem(std::move(pre), std::move(cyc), "random");
}

// Brute-force atoms of mu_n: nested loops over digit choices, no sorting.
inline std::vector<Rational> brute_atoms(const MoranSystem& s, std::size_t n) {
  std::vector<Rational> out{Rational(0)};
  Integer P = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    P *= s.p(i);
    std::vector<Rational> next;
    for (const auto& x : out) {
      for (const auto d : s.level(i).digits.digits()) next.push_back(x + Rational(Integer(d), P));
    }
    out = std::move(next);
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

// mu_n^(xi) as the direct exponential sum over atoms, phases reduced exactly.
inline std::complex<double> direct_transform(const std::vector<Rational>& atoms, double xi) {
  std::complex<double> sum = 0.0;
  for (const auto& x : atoms) {
    const double t = std::fmod(to_double(x) * xi, 1.0);
    sum += std::polar(1.0, -2.0 * kPi * t);
  }
  return sum / static_cast<double>(atoms.size());
}

}  // namespace moran::testkit
