#include "moran/digit_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "moran/errors.hpp"

namespace moran {

std::string_view to_string(DigitClass c) {
  switch (c) {
    case DigitClass::T1: return "T1";
    case DigitClass::T2: return "T2";
    case DigitClass::T3: return "T3";
    case DigitClass::Invalid: return "Invalid";
  }
  return "Invalid";
}

DigitSet::DigitSet(std::vector<std::int64_t> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw StructureError("empty digit set");
  std::sort(digits_.begin(), digits_.end());
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
    throw StructureError("duplicate digit in " + to_string());
  }
}

bool DigitSet::contains(std::int64_t d) const {
  return std::binary_search(digits_.begin(), digits_.end(), d);
}

bool DigitSet::is_consecutive() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != static_cast<std::int64_t>(i)) return false;
  }
  return true;
}

std::string DigitSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out << ',';
    out << digits_[i];
  }
  out << '}';
  return out.str();
}

namespace {

void classify_two(std::int64_t p, const DigitSet& digits, Classification& c) {
  const std::int64_t d = digits.max();
  c.d = d;
  c.l = 0;
  c.d_odd = d;
  if (d > 0) {
    while (c.d_odd % 2 == 0) {
      c.d_odd /= 2;
      ++c.l;
    }
  }
  if (d >= p) c.violations.push_back("T3: requires 0 < d < p");
  const std::int64_t g = std::gcd(d, p);
  if ((p / g) % 2 != 0) c.violations.push_back("T3: requires 2 | p/gcd(d,p)");
}

void classify_three(std::int64_t p, const DigitSet& digits, Classification& c) {
  const std::int64_t a = digits.digits()[1];
  const std::int64_t b = digits.digits()[2];
  c.a = a;
  c.b = b;
  if (std::gcd(a, b) != 1) c.violations.push_back("T2: requires gcd(a,b) = 1");
  const std::int64_t ra = a % 3;
  const std::int64_t rb = b % 3;
  if (!((ra == 1 && rb == 2) || (ra == 2 && rb == 1))) {
    c.violations.push_back("T2: requires {a,b} = {1,2} mod 3");
  }
  if (p % 3 != 0) c.violations.push_back("T2: requires 3 | p");
  if (3 * b > 2 * p) {
    c.violations.push_back("T2: requires b/p < 2/3");
  } else if (3 * b == 2 * p) {
    c.warnings.push_back("boundary-ratio");
  }
}

void classify_many(std::int64_t p, const DigitSet& digits, Classification& c) {
  const auto n = static_cast<std::int64_t>(digits.size());
  if (!digits.is_consecutive()) {
    c.violations.push_back("T1: requires D = {0,1,...,N-1}");
    return;
  }
  if (p % n != 0) c.violations.push_back("T1: requires N | p");
  if (p <= n) c.violations.push_back("T1: requires p > N");
}

}  // namespace

Classification classify_level(std::int64_t p, const DigitSet& digits) {
  Classification c;
  c.n = static_cast<std::int64_t>(digits.size());
  if (p < 2) c.violations.push_back("requires p >= 2");
  if (!digits.contains(0)) c.violations.push_back("requires 0 in D");
  if (digits.min() < 0) c.violations.push_back("requires nonnegative digits");
  if (!c.violations.empty()) return c;

  switch (digits.size()) {
    case 1:
      c.violations.push_back("single-digit set carries no mass split");
      return c;
    case 2:
      classify_two(p, digits, c);
      if (c.violations.empty()) c.cls = DigitClass::T3;
      break;
    case 3:
      classify_three(p, digits, c);
      if (c.violations.empty()) c.cls = DigitClass::T2;
      break;
    default:
      classify_many(p, digits, c);
      if (c.violations.empty()) c.cls = DigitClass::T1;
      break;
  }
  return c;
}

NormalizedLevel normalize_level(std::int64_t p, std::span<const std::int64_t> digits) {
  if (p == 0) throw StructureError("p must be nonzero");
  if (std::find(digits.begin(), digits.end(), 0) == digits.end()) {
    throw StructureError("digit set must contain 0");
  }
  NormalizedLevel out;
  out.theta = p < 0 ? -1 : 1;
  out.p = p < 0 ? -p : p;
  const bool all_positive =
      std::all_of(digits.begin(), digits.end(), [](std::int64_t d) { return d >= 0; });
  if (!all_positive) {
    std::int64_t m = 0;
    for (auto d : digits) m = std::max(m, std::abs(d));
    out.gamma = m;
  }
  out.digits.reserve(digits.size());
  for (auto d : digits) out.digits.push_back(d + out.gamma);
  if (std::find(out.digits.begin(), out.digits.end(), 0) == out.digits.end()) {
    throw StructureError("shifted digit set lacks 0: malformed input");
  }
  std::sort(out.digits.begin(), out.digits.end());
  return out;
}

}  // namespace moran
