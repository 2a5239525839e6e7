#include <gtest/gtest.h>

#include <random>

#include "moran/fourier.hpp"
#include "moran/zero_set.hpp"
#include "test_support.hpp"

using namespace moran;

namespace {

const MoranSystem& final_system() {
  static const MoranSystem s = parse_system("cycle: (2,{0,1}) (3,{0,1,2})");
  return s;
}

}  // namespace

TEST(ZeroSet, FinalExampleWitnesses) {
  const auto one = zero_set_contains(final_system(), Rational(1));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->level, 1u);
  EXPECT_EQ(one->family, ZeroFamily::TwoDigit);

  const auto two = zero_set_contains(final_system(), Rational(2));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->level, 2u);
  EXPECT_EQ(two->family, ZeroFamily::ThreeDigit);
}

TEST(ZeroSet, ZeroIsNeverAZero) {
  EXPECT_FALSE(zero_set_contains(final_system(), Rational(0)).has_value());
  const MoranSystem t1 = parse_system("cycle: (8,{0,1,2,3})");
  EXPECT_FALSE(zero_set_contains(t1, Rational(0)).has_value());
}

TEST(ZeroSet, FinalExampleIsAllNonzeroIntegers) {
  for (int k = -300; k <= 300; ++k) {
    EXPECT_EQ(zero_set_contains(final_system(), Rational(k)).has_value(), k != 0) << k;
  }
  EXPECT_FALSE(zero_set_contains(final_system(), Rational(1, 2)).has_value());
  EXPECT_FALSE(zero_set_contains(final_system(), Rational(7, 3)).has_value());
}

TEST(ZeroSet, MaxLevelRestrictsTheSearch) {
  EXPECT_FALSE(zero_set_contains(final_system(), Rational(2), 1).has_value());
  EXPECT_TRUE(zero_set_contains(final_system(), Rational(2), 2).has_value());
}

TEST(ZeroSet, ConsecutiveFamily) {
  // (8,{0,1,2,3}): zeros at 8 (Z \ 4Z) / 4 at level 1.
  const MoranSystem s = parse_system("cycle: (8,{0,1,2,3})");
  const auto w = zero_set_contains(s, Rational(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->family, ZeroFamily::Consecutive);
  EXPECT_EQ(w->level, 1u);
  EXPECT_EQ(w->index, 1);
  EXPECT_FALSE(zero_set_contains(s, Rational(1)).has_value());
}

TEST(MaskZero, PerClass) {
  const Classification t3 = classify_level(4, DigitSet{0, 2});
  EXPECT_TRUE(mask_zero_contains(t3, Rational(1, 4)));
  EXPECT_TRUE(mask_zero_contains(t3, Rational(-3, 4)));
  EXPECT_FALSE(mask_zero_contains(t3, Rational(1, 2)));

  const Classification t2 = classify_level(9, DigitSet{0, 1, 2});
  EXPECT_TRUE(mask_zero_contains(t2, Rational(1, 3)));
  EXPECT_TRUE(mask_zero_contains(t2, Rational(-2, 3)));
  EXPECT_FALSE(mask_zero_contains(t2, Rational(1)));

  const Classification t1 = classify_level(12, DigitSet{0, 1, 2, 3});
  EXPECT_TRUE(mask_zero_contains(t1, Rational(1, 4)));
  EXPECT_TRUE(mask_zero_contains(t1, Rational(3, 2)));
  EXPECT_FALSE(mask_zero_contains(t1, Rational(1)));

  const Classification bad = classify_level(9, DigitSet{0, 2});
  EXPECT_FALSE(mask_zero_contains(bad, Rational(1, 4)));
}

TEST(MaskZero, AgreesWithNumericMaskOnRandomLevels) {
  // For every admissible level, exact membership on a rational grid must match
  // |m_D(x)| < 1e-12.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = testkit::random_admissible(rng);
    const DigitSet d(raw.digits);
    const Classification info = classify_level(raw.p, d);
    const std::int64_t den = 2 * 3 * static_cast<std::int64_t>(d.size()) * d.max();
    for (std::int64_t k = -2 * den; k <= 2 * den; ++k) {
      const Rational x(k, den);
      const bool exact = mask_zero_contains(info, make_rational(k, den));
      const bool numeric = std::abs(mask_eval(d, to_double(x))) < 1e-12;
      ASSERT_EQ(exact, numeric) << raw.p << " " << d.to_string() << " x=" << k << "/" << den;
    }
  }
}

TEST(ZeroSet, WitnessesAreNumericZeros) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    int found = 0;
    for (int num = -200; num <= 200 && found < 40; ++num) {
      for (int den : {1, 2, 3, 4, 6}) {
        const Rational xi = make_rational(num, den);
        const auto w = zero_set_contains(s, xi);
        if (!w) continue;
        ++found;
        for (std::size_t n = w->level; n <= w->level + 3; ++n) {
          EXPECT_LT(std::abs(fourier_level(s, n, xi, 0.0)), 1e-12);
        }
      }
    }
  }
}

TEST(ZeroSet, NonMembersAreNotNumericZeros) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const MoranSystem s = testkit::random_system(rng);
    for (int num = -60; num <= 60; ++num) {
      const Rational xi = make_rational(num, 6);
      if (num == 0 || zero_set_contains(s, xi)) continue;
      EXPECT_GT(std::abs(fourier_level(s, 40, xi, 0.0)), 1e-9) << to_string(xi);
    }
  }
}
