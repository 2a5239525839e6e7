#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"

namespace moran {

// One generator (p_n, D_n) together with its admissibility class.
struct Level {
  std::int64_t p = 0;
  DigitSet digits;
  Classification info;

  Level() = default;
  // Classifies on construction.
  Level(std::int64_t p, DigitSet digits);

  DigitClass cls() const { return info.cls; }
  std::size_t phi() const { return digits.size(); }
};

// Eventually periodic generator sequence: a finite preamble followed by a
// cycle repeated forever. Levels are 1-based, P(0) = 1.
//
// The measure is mu = delta_{P_1^-1 D_1} * delta_{P_2^-1 D_2} * ... with
// P_n = p_1 ... p_n. A system with an empty cycle describes the finite
// convolution of its preamble and answers only for levels <= preamble size.
class MoranSystem {
 public:
  MoranSystem() = default;
  // Throws StructureError if both lists are empty or some p < 2.
  MoranSystem(std::vector<Level> preamble, std::vector<Level> cycle, std::string name = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Level>& preamble() const { return preamble_; }
  const std::vector<Level>& cycle() const { return cycle_; }
  bool is_finite() const { return cycle_.empty(); }
  // Highest queryable level; nullopt when the cycle is nonempty.
  std::optional<std::size_t> max_level() const;
  bool has_level(std::size_t n) const;

  // Throws std::out_of_range for n == 0 or n beyond a finite system.
  const Level& level(std::size_t n) const;
  std::int64_t p(std::size_t n) const { return level(n).p; }
  std::size_t phi(std::size_t n) const { return level(n).phi(); }

  Integer P(std::size_t n) const;
  // P_0, P_1, ..., P_n.
  std::vector<Integer> partial_products(std::size_t n) const;
  // Product of Phi(1..n): the number of atoms of mu_n.
  Integer atom_count(std::size_t n) const;

  // Every level in preamble and cycle is (T1)-(T3) admissible.
  bool all_admissible() const;
  // The cycle contains a level with Phi >= 3, i.e. infinitely many such levels.
  bool cycle_has_large_digit_set() const;

  // R_n = sum_{i > n} max(D_i) / P_i, exact (geometric over the cycle).
  Rational tail_radius(std::size_t n) const;

 private:
  std::vector<Level> preamble_;
  std::vector<Level> cycle_;
  std::string name_;
};

// Parses the plain-text system grammar:
//
//   # comment
//   preamble: (4,{0,2}) (3,{0,1,2})
//   cycle:    (2,{0,1}) (3,{0,1,2})
//
// Whitespace is insignificant; either section may be empty or omitted.
// Levels with negative p or negative digits are passed through
// normalize_level. Throws SyntaxError or StructureError.
MoranSystem parse_system(std::string_view text);

// Reads and parses a file; the system takes the file stem as its name.
// Throws FileError when the file cannot be read.
MoranSystem load_system(const std::filesystem::path& path);

// Inverse of parse_system for normalized systems.
std::string to_config(const MoranSystem& system);

}  // namespace moran
