#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moran/digit_set.hpp"

namespace moran {

// (p, D, L) with H = N^-1/2 [exp(-2 pi i d l / p)] unitary.
struct HadamardTriple {
  std::int64_t p = 0;
  DigitSet digits;
  std::vector<std::int64_t> companion;  // L
  double residual = 0.0;                // max |H*H - I|
};

// Companion set L for an admissible level:
//   T1  L = (p/N) {0, 1, ..., N-1}
//   T2  L = (p/3) {0, 1, -1}
//   T3  g = gcd(d, p), p = 2 m g, d = g d'' with gcd(d'', 2m) = 1;
//       L = {0, l} with l = m (d'')^-1 mod 2m, 0 < l < 2m.
// Throws AdmissibilityError for an Invalid level.
std::vector<std::int64_t> construct_companion(std::int64_t p, const DigitSet& digits);

HadamardTriple make_hadamard_triple(std::int64_t p, const DigitSet& digits);

// max-norm of H*H - I. Throws std::invalid_argument if #L != #D.
double unitarity_residual(std::int64_t p, const DigitSet& digits,
                          std::span<const std::int64_t> companion);

// Exact test: m_D((l - l') / p) = 0 for all distinct l, l' in L, decided by
// rational membership in the zero set of m_D for the level's class.
// Throws std::invalid_argument if #L != #D and AdmissibilityError for an
// Invalid level.
bool is_hadamard(std::int64_t p, const DigitSet& digits, std::span<const std::int64_t> companion);

}  // namespace moran
