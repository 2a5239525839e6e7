#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moran/fourier.hpp"
#include "moran/rational.hpp"
#include "moran/system.hpp"

namespace moran {

// Sign sequence sigma in {-1, 1}^N, indexed by level (1-based). Only T3
// levels read their sign. Levels past the explicit prefix take `fill`.
class Sigma {
 public:
  Sigma() = default;
  explicit Sigma(std::vector<int> prefix, int fill = 1);

  // Accepts "+-+-" or "1,-1,1"; an empty string is all +1.
  // Throws std::invalid_argument on anything else.
  static Sigma parse(std::string_view text);

  int operator()(std::size_t level) const;
  const std::vector<int>& prefix() const { return prefix_; }
  std::string to_string() const;

 private:
  std::vector<int> prefix_;
  int fill_ = 1;
};

// {-floor(N/2), ..., N - 1 - floor(N/2)}
std::vector<std::int64_t> digit_star(std::int64_t n);

// Per-level factor sets of Lambda_n:
//   T3  P_i {0, sigma_i / 2^(1+l_i)}
//   T2  P_j {0, 1/3, -1/3}
//   T1  P_m D*_m / N_m
// Lambda_n is their Minkowski sum. Throws AdmissibilityError if a level <= n
// is Invalid.
class SpectrumFactors {
 public:
  SpectrumFactors(const MoranSystem& system, std::size_t n, const Sigma& sigma = {});

  std::size_t level() const { return factors_.size(); }
  const std::vector<Rational>& factor(std::size_t i) const { return factors_.at(i - 1); }
  // Product of factor sizes.
  Integer cardinality() const;
  // Exact min and max of Lambda_n.
  std::pair<Rational, Rational> extremes() const;
  // Uniformly random point of Lambda_n, without materializing it.
  Rational sample(std::mt19937_64& rng) const;

 private:
  std::vector<std::vector<Rational>> factors_;
};

struct SpectrumLevel {
  std::size_t level = 0;
  Sigma sigma;
  std::vector<Rational> points;  // ascending
};

// Lambda_n^sigma. Throws CollisionError if the Minkowski sum has fewer than
// prod Phi(i) points.
SpectrumLevel level_spectrum(const MoranSystem& system, std::size_t n, const Sigma& sigma = {});

struct OrthogonalityReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Rational, Rational>> failures;
  bool ok() const { return failures.empty(); }
};

// Every difference of two distinct points must lie in the zero set of mu^
// restricted to levels <= max_level.
OrthogonalityReport check_orthogonal(const MoranSystem& system, std::span<const Rational> points,
                                     std::size_t max_level);
OrthogonalityReport check_orthogonal(const MoranSystem& system, const SpectrumLevel& spectrum);

// Q(xi) = sum_lambda |mu_n^(xi + lambda)|^2.
double q_sum_finite(const MoranSystem& system, std::size_t n, std::span<const Rational> points,
                    double xi);
std::vector<double> q_sum_finite(const MoranSystem& system, std::size_t n,
                                 std::span<const Rational> points, std::span<const double> xis);

// sum_lambda |mu_depth^(xi + lambda)|^2, the Q-sum of the measure truncated at
// `depth`. Bounded by 1 for orthogonal sets.
double q_partial(const MoranSystem& system, std::span<const Rational> points, std::size_t depth,
                 double xi);
std::vector<double> q_partial(const MoranSystem& system, std::span<const Rational> points,
                              std::size_t depth, std::span<const double> xis);

// max |H*H - I| for H = q^-1/2 [exp(-2 pi i lambda x)], x over the atoms and
// lambda over the points. Throws std::invalid_argument on a size mismatch.
double exponential_matrix_residual(const DiscreteMeasure& measure, std::span<const Rational> points);

}  // namespace moran
