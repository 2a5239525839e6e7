#pragma once

#include <string>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

struct Interval {
  Rational lo;
  Rational hi;
};

// Finite union of closed intervals with exact endpoints. Stored sorted, with
// overlapping or touching intervals merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  // Throws std::invalid_argument if some lo > hi.
  explicit IntervalUnion(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  // Lebesgue measure, exact.
  Rational length() const;
  // Precondition for the three below: nonempty (std::logic_error otherwise).
  const Rational& min() const;
  const Rational& max() const;
  Rational diameter() const { return max() - min(); }

  bool contains(const Rational& x) const;
  // x is an endpoint of one of the intervals.
  bool on_boundary(const Rational& x) const;
  // Every interval of `other` lies in *this.
  bool contains(const IntervalUnion& other) const;

  IntervalUnion translated(const Rational& t) const;
  std::string to_string() const;

 private:
  std::vector<Interval> intervals_;
};

// Hausdorff distance between two nonempty unions, exact.
Rational hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace moran
