#include "moran/tiling.hpp"

#include <stdexcept>

namespace moran {

TilingReport tiling_check(const IntervalUnion& tile, std::int64_t window, std::size_t samples) {
  if (tile.empty()) throw std::invalid_argument("tiling_check: empty set");
  if (samples == 0) throw std::invalid_argument("tiling_check: samples must be positive");
  if (Rational(window) < tile.diameter()) {
    throw std::invalid_argument("tiling_check: window smaller than the diameter of T");
  }
  TilingReport report;
  report.samples = samples;
  report.shift = -Rational(floor(tile.min()));
  const IntervalUnion T = tile.translated(report.shift);

  const Integer denom = Integer(static_cast<unsigned long>(samples)) * 2;
  for (std::size_t j = 0; j < samples; ++j) {
    const Rational x = make_rational(Integer(static_cast<unsigned long>(2 * j + 1)), denom);
    int count = 0;
    bool boundary = false;
    for (std::int64_t k = -window; k <= window && !boundary; ++k) {
      const Rational y = x + Rational(k);
      if (T.on_boundary(y)) {
        boundary = true;
      } else if (T.contains(y)) {
        ++count;
      }
    }
    if (boundary) {
      ++report.boundary_hits;
      continue;
    }
    ++report.evaluated;
    if (count != 1) {
      if (report.failures == 0) {
        report.first_failure = x;
        report.first_failure_count = count;
      }
      ++report.failures;
    }
  }
  report.tiles = report.evaluated > 0 && report.failures == 0;
  return report;
}

}  // namespace moran
