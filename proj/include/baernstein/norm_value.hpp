#pragma once

// Norm results in one of three exactness modes:
//   exact      -- the value itself is rational
//   pth_power  -- the value is V^(1/p) with V rational (kept powered, no roots)
//   interval   -- certified rational enclosure [lo, hi] of the value
//
// Comparisons between exact/powered values are decided exactly by raising
// both sides to a common integer power; intervals give a tri-state answer.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "baernstein/exponent.hpp"
#include "baernstein/interval.hpp"
#include "baernstein/rational.hpp"

namespace baernstein {

class NormValue {
 public:
  enum class Mode { exact, pth_power, interval };

  NormValue() : mode_(Mode::exact), a_(0) {}

  static NormValue exact(Rational v) {
    if (v < 0) throw std::invalid_argument("norm value: negative");
    NormValue n;
    n.mode_ = Mode::exact;
    n.a_ = std::move(v);
    return n;
  }
  // represents vp^(1/p); p finite
  static NormValue pth_power(Rational vp, Exponent p) {
    if (vp < 0) throw std::invalid_argument("norm value: negative power");
    if (p.is_infinite()) throw std::invalid_argument("norm value: infinite exponent");
    if (p.is_one()) return exact(std::move(vp));
    NormValue n;
    n.mode_ = Mode::pth_power;
    n.a_ = std::move(vp);
    n.p_ = p;
    return n;
  }
  static NormValue interval(RationalInterval iv) {
    if (iv.lo < 0) iv.lo = 0;
    if (iv.is_point()) return exact(iv.lo);
    NormValue n;
    n.mode_ = Mode::interval;
    n.iv_ = std::move(iv);
    return n;
  }

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }
  const Rational& exact_value() const {
    if (mode_ != Mode::exact) throw std::invalid_argument("norm value: not exact");
    return a_;
  }
  const Rational& power_value() const {
    if (mode_ != Mode::pth_power) throw std::invalid_argument("norm value: not powered");
    return a_;
  }
  const Exponent& power() const { return p_; }
  const RationalInterval& raw_interval() const {
    if (mode_ != Mode::interval) throw std::invalid_argument("norm value: not interval");
    return iv_;
  }

  // enclosure of the value at the given root scale (point for exact)
  RationalInterval enclosure(unsigned scale_bits) const {
    switch (mode_) {
      case Mode::exact:
        return RationalInterval::point(a_);
      case Mode::interval:
        return iv_;
      case Mode::pth_power: {
        // a^(v/u) = (a^(1/u))^v
        RationalInterval r = nth_root_enclosure(a_, p_.u(), scale_bits);
        return r.pow(p_.v());
      }
    }
    throw std::logic_error("norm value: bad mode");
  }

  // exact three-way compare when both sides are exact or powered
  static std::optional<int> exact_compare(const NormValue& x, const NormValue& y) {
    if (x.mode_ == Mode::interval || y.mode_ == Mode::interval) return std::nullopt;
    // x = A^(v1/u1), y = B^(v2/u2)  (exact: u=v=1)
    unsigned long u1 = 1, v1 = 1, u2 = 1, v2 = 1;
    if (x.mode_ == Mode::pth_power) u1 = x.p_.u(), v1 = x.p_.v();
    if (y.mode_ == Mode::pth_power) u2 = y.p_.u(), v2 = y.p_.v();
    // compare A^(v1*u2) with B^(v2*u1); both sides nonnegative
    Rational lhs = pow_ui(x.a_, v1 * u2);
    Rational rhs = pow_ui(y.a_, v2 * u1);
    return cmp(lhs, rhs);
  }

  // tri-state compare; refines root enclosures up to max_bits when needed
  static std::optional<int> compare(const NormValue& x, const NormValue& y,
                                    unsigned scale_bits = 64,
                                    unsigned max_bits = 4096) {
    if (auto c = exact_compare(x, y)) return c;
    for (unsigned bits = scale_bits;; bits *= 2) {
      RationalInterval a = x.enclosure(bits);
      RationalInterval b = y.enclosure(bits);
      if (a.hi < b.lo) return -1;
      if (b.hi < a.lo) return 1;
      if (a.is_point() && b.is_point()) return 0;
      if (bits >= max_bits) return std::nullopt;
    }
  }

  // certified x <= y (false means "not certified", not "greater")
  static bool certified_le(const NormValue& x, const NormValue& y,
                           unsigned scale_bits = 64, unsigned max_bits = 4096) {
    if (auto c = exact_compare(x, y)) return *c <= 0;
    for (unsigned bits = scale_bits;; bits *= 2) {
      RationalInterval a = x.enclosure(bits);
      RationalInterval b = y.enclosure(bits);
      if (a.hi <= b.lo) return true;
      if (b.hi < a.lo) return false;
      if (bits >= max_bits) return false;
    }
  }

  std::string format() const {
    switch (mode_) {
      case Mode::exact:
        return a_.get_str();
      case Mode::pth_power:
        return "(" + a_.get_str() + ")^(1/" + p_.value().get_str() + ")";
      case Mode::interval:
        return "[" + iv_.lo.get_str() + ", " + iv_.hi.get_str() + "]";
    }
    return "?";
  }

 private:
  Mode mode_;
  Rational a_;           // exact value, or the p-th power
  Exponent p_ = Exponent::integer(1);
  RationalInterval iv_;
};

// scale by a nonnegative rational. Powered values with integer p stay exact
// ((c*x)^p = c^p * x^p); non-integer p drops to an enclosure.
inline NormValue scale_norm(const NormValue& x, const Rational& c) {
  if (c < 0) throw std::invalid_argument("scale_norm: negative");
  switch (x.mode()) {
    case NormValue::Mode::exact:
      return NormValue::exact(x.exact_value() * c);
    case NormValue::Mode::interval:
      return NormValue::interval(x.raw_interval().scaled(c));
    case NormValue::Mode::pth_power: {
      const Exponent& p = x.power();
      if (p.v() == 1) {
        return NormValue::pth_power(pow_ui(c, p.u()) * x.power_value(), p);
      }
      return NormValue::interval(x.enclosure(128).scaled(c));
    }
  }
  throw std::logic_error("scale_norm: bad mode");
}

}  // namespace baernstein
