#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "moran/interval_union.hpp"
#include "moran/rational.hpp"

namespace moran {

struct TilingReport {
  bool tiles = false;
  Rational shift;              // T was translated by this integer first
  std::size_t samples = 0;     // points requested
  std::size_t evaluated = 0;   // points away from every endpoint
  std::size_t boundary_hits = 0;
  std::size_t failures = 0;
  std::optional<Rational> first_failure;  // sample x in [0, 1)
  int first_failure_count = 0;            // sum_k 1_T(x + k) there
};

// Checks sum_{k=-window}^{window} 1_T(x + k) == 1 at the exact points
// x_j = (2j + 1) / (2 samples), j < samples. T is first translated by
// -floor(min T), which does not change the answer. Points that land on an
// endpoint of T + k are skipped and counted in boundary_hits.
// Throws std::invalid_argument if T is empty, samples == 0 or
// window < diameter(T).
TilingReport tiling_check(const IntervalUnion& tile, std::int64_t window, std::size_t samples);

}  // namespace moran
