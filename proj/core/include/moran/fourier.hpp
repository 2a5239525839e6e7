#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"
#include "moran/system.hpp"

namespace moran {

using Complex = std::complex<double>;

// m_D(x) = (1/#D) sum_{d in D} exp(-2 pi i d x).
//
// The transform convention is exp(-2 pi i x xi) throughout; every zero-set
// family is symmetric under negation, so moduli and zero sets do not depend
// on the sign choice.
Complex mask_eval(const DigitSet& digits, double x);

// mask_eval at x = r + y where r is given exactly; the d*r phases are reduced
// mod 1 before leaving exact arithmetic.
Complex mask_eval(const DigitSet& digits, const Rational& r, double y);

// Uniform measure on finitely many distinct atoms.
struct DiscreteMeasure {
  std::vector<Rational> atoms;  // ascending
  Rational weight;              // 1 / atoms.size()
};

// Atoms of mu_n = delta_{P_1^-1 D_1} * ... * delta_{P_n^-1 D_n}, i.e. all sums
// sum_{i<=n} d_i / P_i. Throws CollisionError if two sums coincide.
DiscreteMeasure atoms(const MoranSystem& system, std::size_t n);

// mu_n^(xi) = prod_{i=1}^{n} m_{D_i}(xi / P_i); n == 0 gives 1.
Complex fourier_level(const MoranSystem& system, std::size_t n, double xi);
// Same at frequency shift + xi with the shift exact.
Complex fourier_level(const MoranSystem& system, std::size_t n, const Rational& shift, double xi);

struct TailEstimate {
  Complex value;             // prod_{i=n+1}^{n+depth} m_{D_i}(xi / P_i)
  double omitted_deviation;  // bound on |prod_{i>n+depth} m_{D_i}(xi / P_i) - 1|

  // Certified lower bound on |mu_{>n}^(xi)| (0 when the bound is vacuous).
  double lower_modulus() const;
};

// Truncated tail mu_{>n}^, stopping early at the end of a finite system. The bound comes from |1 - m_D(x)| <= 2 pi max(D) |x|
// summed over the omitted levels: dev <= exp(2 pi |xi| R_{n+depth}) - 1.
// Throws std::invalid_argument if depth == 0.
TailEstimate fourier_tail(const MoranSystem& system, std::size_t n, double xi, std::size_t depth);
TailEstimate fourier_tail(const MoranSystem& system, std::size_t n, const Rational& shift,
                          double xi, std::size_t depth);

// Evaluates prod_{i=first}^{last} m_{D_i}((lambda + xi) / P_i) for a fixed list
// of exact shifts lambda and many real xi. The fractional parts of
// lambda / P_i are computed once, exactly.
class ShiftedProduct {
 public:
  ShiftedProduct(const MoranSystem& system, std::size_t first, std::size_t last,
                 std::span<const Rational> shifts);

  std::size_t size() const { return shift_count_; }
  Complex eval(std::size_t shift_index, double xi) const;
  // sum over shifts of |eval|^2.
  double sum_squares(double xi) const;

 private:
  struct LevelData {
    std::vector<std::int64_t> digits;
    double inv_P;
  };
  std::vector<LevelData> levels_;
  std::vector<double> frac_;  // shift-major: frac_[s * levels + k]
  std::size_t shift_count_ = 0;
};

}  // namespace moran
