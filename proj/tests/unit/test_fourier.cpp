#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "moran/errors.hpp"
#include "moran/fourier.hpp"
#include "test_support.hpp"

using namespace moran;
using moran::testkit::kPi;

namespace {

const MoranSystem& final_system() {
  static const MoranSystem s = parse_system("cycle: (2,{0,1}) (3,{0,1,2})");
  return s;
}

}  // namespace

TEST(MaskEval, KnownValues) {
  EXPECT_NEAR(std::abs(mask_eval(DigitSet{0, 1}, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mask_eval(DigitSet{0, 1, 2}, 1.0 / 3.0)), 0.0, 1e-15);
  const DigitSet d{0, 3, 7, 11};
  EXPECT_NEAR(std::abs(mask_eval(d, 0.0) - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(MaskEval, SignConvention) {
  // m_{0,1}(1/4) = (1 + e^{-i pi/2}) / 2 = (1 - i) / 2.
  const Complex v = mask_eval(DigitSet{0, 1}, 0.25);
  EXPECT_NEAR(v.real(), 0.5, 1e-15);
  EXPECT_NEAR(v.imag(), -0.5, 1e-15);
}

TEST(MaskEval, ExactShiftMatchesPlain) {
  const DigitSet d{0, 1, 2};
  const Rational r(7, 3);
  for (double y : {0.0, 0.1, -0.37, 2.5}) {
    const Complex a = mask_eval(d, r, y);
    const Complex b = mask_eval(d, to_double(r) + y);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13);
  }
}

TEST(MaskEval, LargeExactShiftKeepsPrecision) {
  // 1e12 + 1/2 is a zero of m_{0,1}; the naive double path loses it.
  const Rational r = Rational(Integer("1000000000000")) + Rational(1, 2);
  EXPECT_LT(std::abs(mask_eval(DigitSet{0, 1}, r, 0.0)), 1e-15);
}

TEST(Atoms, BinaryExpansion) {
  const MoranSystem s = parse_system("cycle: (2,{0,1})");
  const DiscreteMeasure m = atoms(s, 2);
  ASSERT_EQ(m.atoms.size(), 4u);
  EXPECT_EQ(m.atoms[0], 0);
  EXPECT_EQ(m.atoms[1], Rational(1, 4));
  EXPECT_EQ(m.atoms[2], Rational(1, 2));
  EXPECT_EQ(m.atoms[3], Rational(3, 4));
  EXPECT_EQ(m.weight, Rational(1, 4));
}

TEST(Atoms, FinalExampleLevelOne) {
  const DiscreteMeasure m = atoms(final_system(), 1);
  ASSERT_EQ(m.atoms.size(), 2u);
  EXPECT_EQ(m.atoms[1], Rational(1, 2));
  EXPECT_EQ(m.weight, Rational(1, 2));
}

TEST(Atoms, NonSpectralExampleLevelTwo) {
  const MoranSystem s = parse_system("preamble: (2,{0,1,2}) (2,{0,5,6}) cycle: (2,{0,3})");
  const DiscreteMeasure m = atoms(s, 2);
  const std::vector<Rational> expected{0,
                                       Rational(1, 2),
                                       1,
                                       Rational(5, 4),
                                       Rational(3, 2),
                                       Rational(7, 4),
                                       2,
                                       Rational(9, 4),
                                       Rational(5, 2)};
  EXPECT_EQ(m.atoms, expected);
  EXPECT_EQ(m.weight, Rational(1, 9));
}

TEST(Atoms, CollisionIsReported) {
  // 0 + 2/4 == 1/2 + 0: sums coincide.
  const MoranSystem s = parse_system("cycle: (2,{0,1}) (2,{0,2})");
  EXPECT_THROW(atoms(s, 2), CollisionError);
}

TEST(Atoms, MatchBruteForceOnRandomSystems) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (s.atom_count(n) > 4000) break;
      auto brute = testkit::brute_atoms(s, n);
      std::sort(brute.begin(), brute.end());
      const DiscreteMeasure m = atoms(s, n);
      EXPECT_EQ(m.atoms, brute);
      EXPECT_EQ(Integer(static_cast<unsigned long>(m.atoms.size())), s.atom_count(n));
    }
  }
}

TEST(FourierLevel, Examples) {
  const MoranSystem bin = parse_system("cycle: (2,{0,1})");
  EXPECT_NEAR(std::abs(fourier_level(bin, 1, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_level(final_system(), 2, 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_level(final_system(), 5, 0.0) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_EQ(fourier_level(final_system(), 0, 1.234), Complex(1.0));
}

TEST(FourierLevel, ProductEqualsDirectSum) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xi_dist(-10.0, 10.0);
  for (int trial = 0; trial < 25; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    for (std::size_t n = 1; n <= 6; ++n) {
      if (s.atom_count(n) > 3000) break;
      const auto brute = testkit::brute_atoms(s, n);
      for (int k = 0; k < 100; ++k) {
        const double xi = xi_dist(rng);
        EXPECT_LT(std::abs(fourier_level(s, n, xi) - testkit::direct_transform(brute, xi)), 1e-12);
      }
    }
  }
}

TEST(FourierLevel, RecursionAndSymmetry) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> xi_dist(-20.0, 20.0);
  for (int trial = 0; trial < 20; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    for (int k = 0; k < 50; ++k) {
      const double xi = xi_dist(rng);
      for (std::size_t n = 1; n <= 8; ++n) {
        const Complex prev = fourier_level(s, n - 1, xi);
        const Complex step = mask_eval(s.level(n).digits, xi / to_double(s.P(n)));
        EXPECT_EQ(fourier_level(s, n, xi), prev * step);
        EXPECT_NEAR(std::abs(fourier_level(s, n, -xi)), std::abs(fourier_level(s, n, xi)), 1e-14);
      }
    }
  }
}

TEST(FourierLevel, ExactShiftOverload) {
  const Rational shift(-7, 3);
  for (double xi : {0.0, 0.25, -1.5}) {
    const Complex a = fourier_level(final_system(), 6, shift, xi);
    const Complex b = fourier_level(final_system(), 6, to_double(shift) + xi);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12);
  }
}

TEST(FourierTail, ZeroFrequency) {
  const TailEstimate t = fourier_tail(final_system(), 3, 0.0, 5);
  EXPECT_NEAR(std::abs(t.value - Complex(1.0)), 0.0, 1e-15);
  EXPECT_EQ(t.omitted_deviation, 0.0);
  EXPECT_DOUBLE_EQ(t.lower_modulus(), 1.0);
}

TEST(FourierTail, DyadicProductOracle) {
  const MoranSystem bin = parse_system("cycle: (2,{0,1})");
  const double xi = 1.0 / 3.0;
  double oracle = 1.0;
  for (int i = 1; i <= 20; ++i) oracle *= std::cos(kPi * xi / std::ldexp(1.0, i));
  const TailEstimate t = fourier_tail(bin, 0, xi, 20);
  EXPECT_NEAR(std::abs(t.value), std::abs(oracle), 1e-14);
  // Bound on the remaining product: exp(2 pi |xi| R_20) - 1 with R_20 = 2^-20.
  EXPECT_NEAR(t.omitted_deviation, std::expm1(2.0 * kPi * xi / std::ldexp(1.0, 20)), 1e-18);
}

TEST(FourierTail, DeviationShrinksWithDepth) {
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t depth = 1; depth <= 30; ++depth) {
    const TailEstimate t = fourier_tail(final_system(), 2, 0.8, depth);
    EXPECT_LT(t.omitted_deviation, prev);
    prev = t.omitted_deviation;
  }
}

TEST(FourierTail, BoundCoversTheTruth) {
  // The deep product stands in for the infinite tail.
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xi_dist(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    for (int k = 0; k < 20; ++k) {
      const double xi = xi_dist(rng);
      const TailEstimate shallow = fourier_tail(s, 1, xi, 3);
      const TailEstimate deep = fourier_tail(s, 1, xi, 40);
      EXPECT_LE(std::abs(deep.value - shallow.value),
                std::abs(shallow.value) * shallow.omitted_deviation + 1e-12);
      EXPECT_LE(shallow.lower_modulus(), std::abs(deep.value) + 1e-12);
    }
  }
}

TEST(FourierTail, FiniteSystemHasNoRemainder) {
  const MoranSystem s = parse_system("preamble: (4,{0,2}) (3,{0,1,2})");
  const TailEstimate t = fourier_tail(s, 0, 0.9, 5);
  EXPECT_EQ(t.omitted_deviation, 0.0);
  EXPECT_NEAR(std::abs(t.value - fourier_level(s, 2, 0.9)), 0.0, 1e-15);
}

TEST(FourierTail, RejectsZeroDepth) {
  EXPECT_THROW(fourier_tail(final_system(), 0, 1.0, 0), std::invalid_argument);
}

TEST(ShiftedProduct, MatchesFourierLevel) {
  const std::vector<Rational> shifts{0, Rational(1, 3), -5, Rational(22, 7)};
  const ShiftedProduct sp(final_system(), 1, 6, shifts);
  ASSERT_EQ(sp.size(), shifts.size());
  for (double xi : {0.0, 0.3, -2.2}) {
    double sum = 0.0;
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      const Complex expected = fourier_level(final_system(), 6, shifts[s], xi);
      EXPECT_NEAR(std::abs(sp.eval(s, xi) - expected), 0.0, 1e-13);
      sum += std::norm(expected);
    }
    EXPECT_NEAR(sp.sum_squares(xi), sum, 1e-13);
  }
}
