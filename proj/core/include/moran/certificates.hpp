#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"
#include "moran/spectrum.hpp"
#include "moran/system.hpp"

namespace moran {

// h(k, n) = prod_{i=k+1}^{n-1} 1/Phi(i) * (prod_{j=1}^{k} 1/Phi(j) + 1).
// Throws std::invalid_argument unless 1 <= k < n.
Rational h_bound(const MoranSystem& system, std::size_t k, std::size_t n);

// max over lambda in Lambda_k of |lambda| / P_k (0 for k == 0). Always <= 1
// for admissible systems.
Rational lambda_norm_check(const MoranSystem& system, std::size_t k, const Sigma& sigma = {});

// Parameters of one scaled mask x -> m_D(x / P).
struct MaskParams {
  DigitClass cls = DigitClass::Invalid;
  std::int64_t n = 0;  // T1: N
  std::int64_t d = 0;  // T3
  std::int64_t a = 0;  // T2
  std::int64_t b = 0;  // T2
  double P = 1.0;

  static MaskParams from_level(const Level& level, double P);
};

// Class-specific lower bound on |m_D(x / P)|:
//   T1  1 - (N pi x / P)^2 / 6
//   T3  1 - (pi d x / P)^2 / 2
//   T2  |cos(pi (a+b) x / P) + 2 cos(pi (a-b) x / P)| / 3
// Throws std::invalid_argument for an Invalid class.
double mask_lower_bound(const MaskParams& params, double x);

// f(x, y) = cos x cos y cos(x - y). For a three-digit mask,
// |m_{0,a,b}(t)|^2 = (1 + 8 f(pi a t, pi b t)) / 9.
double f_eval(double x, double y);

struct FMinimum {
  double value;
  std::array<std::pair<double, double>, 8> points;
};

// Global minimum -1/8 of f and its eight minimizers in (-pi, pi]^2.
FMinimum f_min_points();

struct GridMinimum {
  double value = 0.0;
  double spacing_x = 0.0;
  double spacing_y = 0.0;
  // Grid local minima whose value is within `tolerance` of `value`.
  std::vector<std::pair<double, double>> argmins;
};

// Brute-force minimum of f over a resolution x resolution grid spanning
// [x_lo, x_hi] x [y_lo, y_hi] (endpoints included).
GridMinimum grid_minimize_f(double x_lo, double x_hi, double y_lo, double y_hi,
                            std::size_t resolution, double tolerance = 1e-4);

// C0(n_k) = prod_{i >= n_k + 2} (1 - (43 pi / (96 * 2^(i-9)))^2 / 2), a lower
// bound for prod_{j>=2} |m_{D_{n_k+j}}((xi + lambda) / P_{n_k+j})| on |xi| < 1.
// Throws std::invalid_argument if n_k < 7.
double tail_constant(std::size_t n_k);

// Certified lower bound for |m_{D_{n_k+1}}((xi + lambda) / P_{n_k+1})| over
// |xi| < 1, lambda in Lambda_{n_k}:
//   T1  1 - (3 pi / 4)^2 / 6
//   T2  min sqrt((1 + 8 f) / 9) over [0, l' pi]^2, l' = (1 + 2^-n_k) b / p,
//       from a grid search corrected by the Lipschitz constant of 1 + 8f.
// Throws std::invalid_argument when Phi(n_k + 1) == 2 and AdmissibilityError
// when the level is Invalid.
double epsilon_next_level(const MoranSystem& system, std::size_t n_k, const Sigma& sigma = {});

enum class Verdict { Pass, ConditionsFailed, Inconclusive };

std::string_view to_string(Verdict v);

struct CertifyOptions {
  Sigma sigma;
  std::size_t scan_levels = 12;  // n_k is searched in [7, scan_levels]
  std::size_t samples = 200;
  std::size_t depth = 30;
  std::uint64_t seed = 20240101;
};

// Bounds gathered at one subsequence index n_k.
struct TailCheck {
  std::size_t n_k = 0;
  double tail_constant = 0.0;  // C0
  double epsilon_next = 0.0;   // eps'
  double epsilon = 0.0;        // C0 * eps'
  double min_observed = 0.0;   // smallest certified |mu_{>n_k}^(xi + lambda)| sampled
  std::size_t samples = 0;
};

struct Certificate {
  std::string system;
  Sigma sigma;
  int spectral_case = 0;  // 1: infinitely many Phi >= 3 levels, 2: finitely many
  std::vector<TailCheck> checks;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> diagnostics;
};

// Numeric spectrality certificate for Lambda^sigma:
//  - any Invalid level: ConditionsFailed;
//  - cycle with a Phi >= 3 level: for every n_k >= 7 with Phi(n_k+1) >= 3 in
//    the scan range, eps = C0 * eps' must be >= 1e-9 and every sampled
//    |mu_{>n_k}^(xi + lambda)| (certified through the truncated tail) must
//    exceed it;
//  - cycle of two-digit levels only: Lambda_N (N = preamble length) must be
//    an exact spectrum of mu_N and every tail level must satisfy
//    2 | p / gcd(d, p).
// Any positive bound below 1e-9 gives Inconclusive, never Pass.
Certificate certify(const MoranSystem& system, const CertifyOptions& options = {});

}  // namespace moran
