#include "moran/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace moran {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw std::invalid_argument("IntervalUnion: interval with lo > hi");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

Rational IntervalUnion::length() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

const Rational& IntervalUnion::min() const {
  if (empty()) throw std::logic_error("IntervalUnion::min on empty union");
  return intervals_.front().lo;
}

const Rational& IntervalUnion::max() const {
  if (empty()) throw std::logic_error("IntervalUnion::max on empty union");
  return intervals_.back().hi;
}

bool IntervalUnion::contains(const Rational& x) const {
  // First interval with hi >= x.
  const auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                                   [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  return it != intervals_.end() && it->lo <= x;
}

bool IntervalUnion::on_boundary(const Rational& x) const {
  const auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                                   [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  return it != intervals_.end() && (it->lo == x || it->hi == x);
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  for (const auto& iv : other.intervals_) {
    const auto it = std::lower_bound(
        intervals_.begin(), intervals_.end(), iv.lo,
        [](const Interval& a, const Rational& v) { return a.hi < v; });
    if (it == intervals_.end() || it->lo > iv.lo || it->hi < iv.hi) return false;
  }
  return true;
}

IntervalUnion IntervalUnion::translated(const Rational& t) const {
  IntervalUnion out;
  out.intervals_.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.intervals_.push_back({iv.lo + t, iv.hi + t});
  return out;
}

std::string IntervalUnion::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += " U ";
    out += "[" + moran::to_string(iv.lo) + ", " + moran::to_string(iv.hi) + "]";
  }
  return out;
}

namespace {

Rational distance_to(const IntervalUnion& u, const Rational& x) {
  const auto& ivs = u.intervals();
  const auto it = std::lower_bound(ivs.begin(), ivs.end(), x,
                                   [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  Rational best;
  bool have = false;
  if (it != ivs.end()) {
    if (it->lo <= x) return 0;
    best = it->lo - x;
    have = true;
  }
  if (it != ivs.begin()) {
    const Rational left = x - std::prev(it)->hi;
    if (!have || left < best) best = left;
  }
  return best;
}

// sup over a of dist(., b). dist(., b) restricted to an interval of a peaks at
// the interval's endpoints or at the midpoint of a gap of b.
Rational directed(const IntervalUnion& a, const IntervalUnion& b) {
  Rational worst = 0;
  auto consider = [&](const Rational& x) {
    const Rational d = distance_to(b, x);
    if (d > worst) worst = d;
  };
  for (const auto& iv : a.intervals()) {
    consider(iv.lo);
    consider(iv.hi);
  }
  const auto& gaps = b.intervals();
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    const Rational mid = (gaps[i].hi + gaps[i + 1].lo) / 2;
    if (a.contains(mid)) consider(mid);
  }
  return worst;
}

}  // namespace

Rational hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty union");
  const Rational ab = directed(a, b);
  const Rational ba = directed(b, a);
  return ab > ba ? ab : ba;
}

}  // namespace moran
