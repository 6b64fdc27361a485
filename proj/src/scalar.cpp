#include "rbs/scalar.hpp"

#include <cctype>
#include <sstream>

namespace rbs {

std::string rational_to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&]() -> Rational {
    throw input_error("bad rational literal '" + s + "' (expected p or p/q)");
  };
  std::size_t i = 0;
  auto scan_int = [&](std::string& out) {
    if (i < s.size() && s[i] == '+')
      ++i;  // bignum string ctor rejects an explicit plus
    else if (i < s.size() && s[i] == '-')
      out.push_back(s[i++]);
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out.push_back(s[i++]);
      ++digits;
    }
    return digits > 0;
  };
  std::string num_str, den_str = "1";
  if (!scan_int(num_str)) return bad();
  if (i < s.size()) {
    if (s[i] != '/') return bad();
    ++i;
    den_str.clear();
    if (!scan_int(den_str)) return bad();
    if (i != s.size()) return bad();
  }
  Int num(num_str), den(den_str);
  if (den == 0) throw input_error("zero denominator in rational literal '" + s + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string scalar_to_string(const Rational& x) { return rational_to_string(x); }

std::string scalar_to_string(const Fp& x) { return std::to_string(x.value()); }

std::int64_t Fp::norm(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

Fp::Fp(long long v, std::int64_t p) {
  if (p <= 0) throw input_error("prime field modulus must be positive");
  p_ = p;
  v_ = norm(v, p);
}

void Fp::unify(Fp& a, Fp& b) {
  if (a.p_ == b.p_) return;
  if (a.p_ == 0) {
    a.v_ = norm(a.v_, b.p_);
    a.p_ = b.p_;
  } else if (b.p_ == 0) {
    b.v_ = norm(b.v_, a.p_);
    b.p_ = a.p_;
  } else {
    throw input_error("mixed prime-field moduli " + std::to_string(a.p_) + " and " +
                      std::to_string(b.p_));
  }
}

Fp Fp::operator-() const {
  Fp r = *this;
  r.v_ = p_ == 0 ? -v_ : norm(-v_, p_);
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  Fp b = o;
  unify(*this, b);
  v_ = p_ == 0 ? v_ + b.v_ : norm(v_ + b.v_, p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  Fp b = o;
  unify(*this, b);
  v_ = p_ == 0 ? v_ - b.v_ : norm(v_ - b.v_, p_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  Fp b = o;
  unify(*this, b);
  v_ = p_ == 0 ? v_ * b.v_ : norm(v_ * b.v_, p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inv(); }

bool operator==(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::unify(x, y);
  return x.v_ == y.v_;
}

Fp Fp::inv() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::logic_error("inverse of a field-agnostic literal");
  }
  if (v_ == 0) throw input_error("inverse of zero in F_p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::logic_error("non-invertible element in F_p (composite modulus?)");
  return Fp(x0, p_);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp reduce_mod_p(const Rational& x, std::int64_t p) {
  if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
  Int num = numerator(x), den = denominator(x);
  Int pn = p;
  if (den % pn == 0)
    throw input_error("denominator of " + rational_to_string(x) + " vanishes mod " +
                      std::to_string(p));
  auto to_small = [&](const Int& v) {
    Int r = v % pn;
    if (r < 0) r += pn;
    return static_cast<std::int64_t>(r);
  };
  Fp n(to_small(num), p), d(to_small(den), p);
  return n / d;
}

}  // namespace rbs
