#pragma once

// Certified enclosures with exact rational endpoints. Sums, products and
// integer powers are exact; only k-th roots introduce width, enclosed via
// GMP integer root extraction at a caller-chosen binary scale.

#include <stdexcept>

#include "baernstein/rational.hpp"

namespace baernstein {

struct RationalInterval {
  Rational lo, hi;

  RationalInterval() : lo(0), hi(0) {}
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval: lo > hi");
  }
  static RationalInterval point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }

  RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RationalInterval& operator+=(const RationalInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  // scaling by a nonnegative rational
  RationalInterval scaled(const Rational& c) const {
    if (c < 0) throw std::invalid_argument("interval: negative scale");
    return {lo * c, hi * c};
  }
  // x^k for intervals of nonnegative numbers
  RationalInterval pow(unsigned long k) const {
    if (lo < 0) throw std::invalid_argument("interval: pow on negative interval");
    return {pow_ui(lo, k), pow_ui(hi, k)};
  }

  static RationalInterval join_max(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
  }

  bool certainly_le(const Rational& v) const { return hi <= v; }
  bool certainly_ge(const Rational& v) const { return lo >= v; }
  bool certainly_lt(const RationalInterval& o) const { return hi < o.lo; }
};

// Encloses q^(1/k) for q >= 0, k >= 1. Width <= 3 * 2^-scale_bits; exact
// k-th powers of rationals come back as point intervals.
inline RationalInterval nth_root_enclosure(const Rational& q, unsigned long k, unsigned scale_bits) {
  if (q < 0) throw std::invalid_argument("root: negative radicand");
  if (k == 0) throw std::invalid_argument("root: zero index");
  if (k == 1 || q == 0) return RationalInterval::point(q);

  BigInt scale = BigInt(1) << scale_bits;
  BigInt scale_k = pow_ui(scale, k);
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();

  BigInt num = a * scale_k;
  BigInt q_floor, rem;
  mpz_fdiv_qr(q_floor.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());

  BigInt r_lo;
  int exact_root = mpz_root(r_lo.get_mpz_t(), q_floor.get_mpz_t(), k);
  if (exact_root != 0 && rem == 0) {
    Rational v = make_rational(r_lo, scale);
    return RationalInterval::point(v);
  }
  BigInt q_ceil = rem == 0 ? q_floor : BigInt(q_floor + 1);
  BigInt r_hi;
  mpz_root(r_hi.get_mpz_t(), q_ceil.get_mpz_t(), k);
  return {make_rational(r_lo, scale), make_rational(r_hi + 1, scale)};
}

}  // namespace baernstein
