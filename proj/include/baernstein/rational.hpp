#pragma once

// Exact rational arithmetic on top of GMP, plus the small parsing and
// formatting helpers shared across the library. No floating point is used
// anywhere; decimal and scientific literals are converted exactly.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace baernstein {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  // gmpxx has no long long constructor; long is 64-bit on every target here
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// q^k for k >= 0.
inline Rational pow_ui(const Rational& q, unsigned long k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return r;  // already canonical: gcd(a,b)=1 implies gcd(a^k,b^k)=1
}

inline BigInt pow_ui(const BigInt& z, unsigned long k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), k);
  return r;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Shortest exact form: "5", "-2/3".
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline BigInt parse_integer(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (!all_digits(s)) throw std::invalid_argument("rational: bad integer '" + s + "'");
  BigInt z(s, 10);
  return neg ? BigInt(-z) : z;
}

}  // namespace detail

// Accepts "a/b", plain integers, and exact decimal/scientific literals
// ("0.25", "1e-12", "-2.5e3"). Everything is converted without rounding.
inline Rational rational_from_string(std::string s) {
  // strip whitespace
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("rational: empty literal");

  if (auto slash = t.find('/'); slash != std::string::npos) {
    BigInt num = detail::parse_integer(t.substr(0, slash));
    BigInt den = detail::parse_integer(t.substr(slash + 1));
    return make_rational(num, den);
  }

  std::string mantissa = t;
  long exp10 = 0;
  if (auto e = t.find_first_of("eE"); e != std::string::npos) {
    mantissa = t.substr(0, e);
    BigInt ez = detail::parse_integer(t.substr(e + 1));
    if (!ez.fits_slong_p()) throw std::invalid_argument("rational: exponent out of range");
    exp10 = ez.get_si();
  }
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
    if (frac_digits == 0) throw std::invalid_argument("rational: trailing dot in '" + s + "'");
  }
  BigInt m = detail::parse_integer(mantissa);
  long net = exp10 - frac_digits;
  if (net > 100000 || net < -100000) throw std::invalid_argument("rational: exponent out of range");
  BigInt ten_pow = pow_ui(BigInt(10), static_cast<unsigned long>(net < 0 ? -net : net));
  return net >= 0 ? make_rational(m * ten_pow, 1) : make_rational(m, ten_pow);
}

}  // namespace baernstein
