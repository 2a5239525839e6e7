#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace moran {

// Admissibility classes of a level (p, D):
//   T1  D = {0, 1, ..., N-1}, N > 3, N | p, p > N
//   T2  D = {0, a, b}, gcd(a, b) = 1, {a, b} = {1, 2} mod 3, 3 | p, b/p < 2/3
//   T3  D = {0, d}, 0 < d < p, 2 | p / gcd(d, p)
enum class DigitClass { T1, T2, T3, Invalid };

std::string_view to_string(DigitClass c);

// Sorted set of distinct integer digits.
class DigitSet {
 public:
  DigitSet() = default;
  // Throws StructureError when empty or when a digit repeats.
  explicit DigitSet(std::vector<std::int64_t> digits);
  DigitSet(std::initializer_list<std::int64_t> digits)
      : DigitSet(std::vector<std::int64_t>(digits)) {}

  std::span<const std::int64_t> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  std::int64_t min() const { return digits_.front(); }
  std::int64_t max() const { return digits_.back(); }
  bool contains(std::int64_t d) const;
  // D = {0, 1, ..., #D - 1}
  bool is_consecutive() const;

  std::string to_string() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  std::vector<std::int64_t> digits_;
};

struct Classification {
  DigitClass cls = DigitClass::Invalid;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  std::int64_t n = 0;       // cardinality, N for T1
  std::int64_t a = 0;       // T2
  std::int64_t b = 0;       // T2
  std::int64_t d = 0;       // T3
  int l = 0;                // T3: d = 2^l * d_odd
  std::int64_t d_odd = 0;   // T3

  bool admissible() const { return cls != DigitClass::Invalid; }
};

// Never throws; an inadmissible level comes back as Invalid with the list of
// violated clauses. A T2 level with b/p == 2/3 exactly is returned as T2 with
// the "boundary-ratio" warning.
Classification classify_level(std::int64_t p, const DigitSet& digits);

struct NormalizedLevel {
  std::int64_t p = 0;
  std::vector<std::int64_t> digits;
  int theta = 1;             // sign applied to p
  std::int64_t gamma = 0;    // shift applied to the digits
};

// (p, D) -> (theta p, D + gamma) with theta p > 0 and every nonzero digit of
// D + gamma positive; gamma is 0 or max |D|. Leaves |mu^| unchanged.
// Throws StructureError if p == 0, D lacks 0, or the shifted set lacks 0.
NormalizedLevel normalize_level(std::int64_t p, std::span<const std::int64_t> digits);

}  // namespace moran
