#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "moran/errors.hpp"
#include "moran/system.hpp"

using namespace moran;

TEST(ParseSystem, AlternatingCycle) {
  const MoranSystem s = parse_system("cycle: (2,{0,1}) (3,{0,1,2})");
  EXPECT_TRUE(s.preamble().empty());
  ASSERT_EQ(s.cycle().size(), 2u);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(s.phi(n), n % 2 ? 2u : 3u);
  EXPECT_EQ(s.P(4), 36);
  EXPECT_FALSE(s.max_level().has_value());
}

TEST(ParseSystem, PreambleOnly) {
  const MoranSystem s = parse_system("preamble: (4,{0,2})");
  EXPECT_TRUE(s.is_finite());
  EXPECT_EQ(s.max_level(), 1u);
  EXPECT_EQ(s.level(1).p, 4);
  EXPECT_EQ(s.level(1).digits, (DigitSet{0, 2}));
  EXPECT_THROW(s.level(2), std::out_of_range);
  EXPECT_THROW(s.level(0), std::out_of_range);
}

TEST(ParseSystem, CommentsAndWhitespace) {
  const MoranSystem s = parse_system(
      "# header\n"
      "preamble:\n"
      "  ( 4 , { 0 , 2 } )   # first\n"
      "cycle:(9,{0,1,2})(4,{0,2})\n");
  EXPECT_EQ(s.preamble().size(), 1u);
  EXPECT_EQ(s.cycle().size(), 2u);
  EXPECT_EQ(s.p(2), 9);
  EXPECT_EQ(s.p(3), 4);
  EXPECT_EQ(s.p(4), 9);
}

TEST(ParseSystem, StructuralErrors) {
  EXPECT_THROW(parse_system("cycle: (1,{0,1})"), StructureError);
  EXPECT_THROW(parse_system("cycle: (3,{})"), StructureError);
  EXPECT_THROW(parse_system("cycle: (3,{0,1,1})"), StructureError);
  EXPECT_THROW(parse_system("cycle: (3,{1,2})"), StructureError);
  EXPECT_THROW(parse_system(""), StructureError);
}

TEST(ParseSystem, SyntaxErrors) {
  EXPECT_THROW(parse_system("cycle: (2,{0,1}"), SyntaxError);
  EXPECT_THROW(parse_system("cycle: 2,{0,1}"), SyntaxError);
  EXPECT_THROW(parse_system("loop: (2,{0,1})"), SyntaxError);
  EXPECT_THROW(parse_system("cycle: (2,{0,1}) cycle: (2,{0,1})"), SyntaxError);
  EXPECT_THROW(parse_system("cycle: (x,{0,1})"), SyntaxError);
  try {
    parse_system("cycle: (2,{0,1})\n\n(3,{0,1,2}\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseSystem, NegativeEntriesAreNormalized) {
  const MoranSystem s = parse_system("cycle: (-2,{0,-3}) (-4,{0,2})");
  EXPECT_EQ(s.level(1).p, 2);
  EXPECT_EQ(s.level(1).digits, (DigitSet{0, 3}));
  EXPECT_EQ(s.level(2).p, 4);
  EXPECT_FALSE(s.level(1).info.warnings.empty());
}

TEST(ParseSystem, ClassificationFailuresAreNotFatal) {
  const MoranSystem s = parse_system("preamble: (2,{0,1,2}) (2,{0,5,6}) cycle: (2,{0,3})");
  EXPECT_FALSE(s.all_admissible());
  EXPECT_EQ(s.level(2).cls(), DigitClass::Invalid);
}

TEST(MoranSystem, ConstructorChecks) {
  EXPECT_THROW(MoranSystem({}, {}), StructureError);
  EXPECT_THROW(MoranSystem({}, {Level(1, DigitSet{0})}), StructureError);
}

TEST(MoranSystem, Products) {
  const MoranSystem s = parse_system("preamble: (4,{0,2}) cycle: (2,{0,1}) (3,{0,1,2})");
  const auto P = s.partial_products(5);
  ASSERT_EQ(P.size(), 6u);
  EXPECT_EQ(P[0], 1);
  EXPECT_EQ(P[1], 4);
  EXPECT_EQ(P[2], 8);
  EXPECT_EQ(P[3], 24);
  EXPECT_EQ(P[5], 144);
  EXPECT_EQ(s.atom_count(3), 12);
  EXPECT_EQ(s.P(0), 1);
}

TEST(MoranSystem, TailRadius) {
  // Final example: R_n = 1 / P_n.
  const MoranSystem fin = parse_system("cycle: (2,{0,1}) (3,{0,1,2})");
  EXPECT_EQ(fin.tail_radius(0), 1);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(fin.tail_radius(n), Rational(1) / Rational(fin.P(n)));

  // Geometric tail: 3/2^(n+1) + 3/2^(n+2) + ... = 3/2^n.
  const MoranSystem ex = parse_system("preamble: (2,{0,1,2}) (2,{0,5,6}) cycle: (2,{0,3})");
  EXPECT_EQ(ex.tail_radius(2), Rational(3, 4));
  EXPECT_EQ(ex.tail_radius(14), Rational(3, 16384));
  EXPECT_EQ(ex.tail_radius(0), Rational(1) + Rational(3, 2) + Rational(3, 4));

  // Finite systems stop contributing.
  const MoranSystem fi = parse_system("preamble: (4,{0,2}) (3,{0,1,2})");
  EXPECT_EQ(fi.tail_radius(2), 0);
  EXPECT_EQ(fi.tail_radius(1), Rational(1, 6));
}

TEST(MoranSystem, TailRadiusMatchesPartialSums) {
  const MoranSystem s = parse_system("preamble: (5,{0,3}) cycle: (9,{0,1,2}) (4,{0,2}) (6,{0,1})");
  for (std::size_t n = 0; n < 6; ++n) {
    Rational partial = 0;
    for (std::size_t i = n + 1; i <= n + 60; ++i) {
      partial += Rational(Integer(s.level(i).digits.max()), s.P(i));
    }
    const Rational gap = s.tail_radius(n) - partial;
    EXPECT_GE(gap, 0);
    EXPECT_LT(to_double(gap), 1e-30);
  }
}

TEST(MoranSystem, Flags) {
  EXPECT_TRUE(parse_system("cycle: (9,{0,1,2}) (4,{0,2})").cycle_has_large_digit_set());
  EXPECT_FALSE(parse_system("preamble: (3,{0,1,2}) cycle: (4,{0,1})").cycle_has_large_digit_set());
}

TEST(ToConfig, RoundTrip) {
  const MoranSystem s = parse_system("preamble: (4,{0,2}) (3,{0,1,2}) cycle: (9,{0,1,2}) (4,{0,2})");
  const MoranSystem t = parse_system(to_config(s));
  ASSERT_EQ(t.preamble().size(), 2u);
  ASSERT_EQ(t.cycle().size(), 2u);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(s.p(n), t.p(n));
    EXPECT_EQ(s.level(n).digits, t.level(n).digits);
  }
}

TEST(LoadSystem, ReadsFileAndNamesIt) {
  const auto path = std::filesystem::temp_directory_path() / "moran_load_test.moran";
  {
    std::ofstream out(path);
    out << "cycle: (2,{0,1})\n";
  }
  const MoranSystem s = load_system(path);
  EXPECT_EQ(s.name(), "moran_load_test");
  EXPECT_EQ(s.p(3), 2);
  std::filesystem::remove(path);
  EXPECT_THROW(load_system(path), FileError);
}
