#include "moran/zero_set.hpp"

namespace moran {

std::string_view to_string(ZeroFamily f) {
  switch (f) {
    case ZeroFamily::TwoDigit: return "P_i(2Z+1)/(2d_i)";
    case ZeroFamily::ThreeDigit: return "P_j(3Z+{1,2})/3";
    case ZeroFamily::Consecutive: return "P_m(Z\\N_mZ)/N_m";
  }
  return "?";
}

namespace {

// t = scale * x must be an integer with t mod modulus != 0.
bool integer_off_lattice(const Rational& x, const Integer& scale, const Integer& modulus,
                         Integer* t_out = nullptr) {
  const Rational t = x * Rational(scale);
  if (!is_integer(t)) return false;
  if (mod(t.get_num(), modulus) == 0) return false;
  if (t_out) *t_out = t.get_num();
  return true;
}

bool family_contains(const Classification& info, const Rational& x, Integer* t_out) {
  switch (info.cls) {
    case DigitClass::T3:
      // d x in Z + 1/2  <=>  2 d x odd
      return integer_off_lattice(x, Integer(2 * info.d), Integer(2), t_out);
    case DigitClass::T2:
      return integer_off_lattice(x, Integer(3), Integer(3), t_out);
    case DigitClass::T1:
      return integer_off_lattice(x, Integer(info.n), Integer(info.n), t_out);
    case DigitClass::Invalid:
      return false;
  }
  return false;
}

}  // namespace

bool mask_zero_contains(const Classification& info, const Rational& x) {
  return family_contains(info, x, nullptr);
}

std::optional<ZeroWitness> zero_set_contains(const MoranSystem& system, const Rational& xi,
                                             std::optional<std::size_t> max_level) {
  if (xi == 0) return std::nullopt;
  const Rational bound = 2 * abs(xi);
  Integer P_prev = 1;
  for (std::size_t i = 1;; ++i) {
    if (max_level && i > *max_level) break;
    if (!system.has_level(i)) break;
    if (Rational(P_prev) > bound) break;
    const Level& lv = system.level(i);
    const Integer P = P_prev * lv.p;
    Integer t;
    if (family_contains(lv.info, xi / Rational(P), &t)) {
      ZeroWitness w;
      w.level = i;
      w.index = t;
      w.family = lv.cls() == DigitClass::T3   ? ZeroFamily::TwoDigit
                 : lv.cls() == DigitClass::T2 ? ZeroFamily::ThreeDigit
                                              : ZeroFamily::Consecutive;
      return w;
    }
    P_prev = P;
  }
  return std::nullopt;
}

}  // namespace moran
