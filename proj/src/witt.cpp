#include "rbs/witt.hpp"

#include <cstdlib>

#include "rbs/errors.hpp"

namespace rbs {

namespace {

Rational int_pow(const Rational& q, int n) {
  Rational r = 1;
  for (int i = 0; i < std::abs(n); ++i) r *= q;
  if (n < 0) r = Rational(1) / r;
  return r;
}

}  // namespace

WittReport witt_window_check(const Rational& q, int window, const std::map<int, Rational>& overrides) {
  if (window < 2) throw input_error("window must be at least 2");
  if (is_zero(q)) throw precondition_error("scale parameter must be nonzero");
  for (int n = 1; n <= 2 * window; ++n)
    if (int_pow(q, n) == 1)
      throw precondition_error("scale parameter is a root of unity within the window");

  // r[n] = (1 - q) / (1 - q^n), the operator's eigencoefficient on index n.
  std::map<int, Rational> r;
  for (int n = -window; n <= window; ++n) {
    if (n == 0) continue;
    r[n] = (Rational(1) - q) / (Rational(1) - int_pow(q, n));
  }
  for (const auto& [n, value] : overrides) {
    if (n == 0 || std::abs(n) > window) throw input_error("override index outside the window");
    r[n] = value;
  }

  WittReport rep;
  for (int m = -window; m <= window; ++m) {
    if (m == 0) continue;
    for (int n = -window; n <= window; ++n) {
      if (n == 0) continue;
      if (m + n == 0 || std::abs(m + n) > window) {
        ++rep.skipped_pairs;
        continue;
      }
      ++rep.checked_pairs;
      // [R l_m, R l_n] = R([R l_m, l_n] + [l_m, (sigma R) l_n]), both sides
      // multiples of l_{m+n}; compare the coefficients.
      Rational lhs = r[m] * r[n] * Rational(m - n);
      Rational rhs = Rational(m - n) * (r[m] + int_pow(q, n) * r[n]) * r[m + n];
      Rational res = lhs - rhs;
      if (!is_zero(res) && rep.holds) {
        rep.holds = false;
        rep.witness = {m, n};
        rep.residual = res;
      }
    }
  }
  return rep;
}

}  // namespace rbs
