#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "rbs/errors.hpp"

namespace rbs {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar.  Always normalized: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x == 1; }

// Canonical form: "p/q" with q > 0, or "p" when q = 1.
std::string rational_to_string(const Rational& x);

// Accepts "[+-]?digits" or "[+-]?digits/[+-]?digits" with nonzero
// denominator.  Anything else is an input_error.
Rational rational_from_string(const std::string& s);

// Element of a prime field F_p with runtime modulus.
//
// A default-constructed or integer-constructed value has modulus 0 and acts
// as a field-agnostic integer literal; it adopts the modulus of the first
// real element it meets.  Mixing two distinct nonzero moduli is an
// input_error.  This lets generic code written for any scalar (K(0), K(1),
// -x, ...) run unchanged over F_p.
class Fp {
 public:
  Fp() = default;
  Fp(long long v) : v_(v) {}  // NOLINT: implicit by design, mirrors Rational
  Fp(long long v, std::int64_t p);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inv() const;

 private:
  static std::int64_t norm(std::int64_t v, std::int64_t p);
  // Promotes literals so both operands share one modulus.
  static void unify(Fp& a, Fp& b);

  std::int64_t v_ = 0;
  std::int64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.modulus() == 0 ? x.value() == 0 : x.value() % x.modulus() == 0; }

std::string scalar_to_string(const Rational& x);
std::string scalar_to_string(const Fp& x);

bool is_prime(std::int64_t p);

// Reduces a rational mod p; den divisible by p is an input_error.
Fp reduce_mod_p(const Rational& x, std::int64_t p);

}  // namespace rbs
