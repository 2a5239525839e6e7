#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "moran/digit_set.hpp"
#include "moran/rational.hpp"
#include "moran/system.hpp"

namespace moran {

enum class ZeroFamily {
  TwoDigit,     // T3 level i:  P_i (2Z+1) / (2 d_i)
  ThreeDigit,   // T2 level j:  P_j (3Z+{1,2}) / 3
  Consecutive,  // T1 level m:  P_m (Z \ N_m Z) / N_m
};

std::string_view to_string(ZeroFamily f);

struct ZeroWitness {
  std::size_t level = 0;
  ZeroFamily family = ZeroFamily::TwoDigit;
  // The integer t with xi = P_level * t / (2d), P_level * t / 3 or
  // P_level * t / N respectively.
  Integer index;
};

// x in Z(m_D) for an admissible level, decided exactly. Always false for
// Invalid levels.
bool mask_zero_contains(const Classification& info, const Rational& x);

// Membership of xi in the zero set of mu^, searched over admissible levels
// 1..max_level (all levels when max_level is empty). Only levels with
// P_{i-1} <= 2|xi| can match, so the search is finite. xi == 0 is never a
// zero.
std::optional<ZeroWitness> zero_set_contains(const MoranSystem& system, const Rational& xi,
                                             std::optional<std::size_t> max_level = std::nullopt);

}  // namespace moran
