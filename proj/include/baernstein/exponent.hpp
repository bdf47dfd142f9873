#pragma once

// The exponent parameter p of an l_p aggregation: a rational in [1, oo) or
// the symbol infinity. Rational exponents keep exact numerator/denominator
// so p-th powers can be compared without rounding.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "baernstein/rational.hpp"

namespace baernstein {

class Exponent {
 public:
  Exponent() : inf_(false), p_(1) {}

  static Exponent infinity() {
    Exponent e;
    e.inf_ = true;
    return e;
  }
  static Exponent of(Rational p) {
    if (p < 1) throw std::invalid_argument("exponent: p must be >= 1");
    if (p.get_num() > 1'000'000 || p.get_den() > 1'000'000)
      throw std::invalid_argument("exponent: p out of supported range");
    Exponent e;
    e.p_ = std::move(p);
    return e;
  }
  static Exponent integer(long k) { return of(Rational(k)); }

  // "2", "3/2", "inf"
  static Exponent parse(const std::string& s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "inf" || t == "oo" || t == "infinity") return infinity();
    return of(rational_from_string(t));
  }

  bool is_infinite() const { return inf_; }
  bool is_one() const { return !inf_ && p_ == 1; }
  bool is_integer() const { return !inf_ && p_.get_den() == 1; }
  const Rational& value() const {
    if (inf_) throw std::invalid_argument("exponent: infinite p has no rational value");
    return p_;
  }
  // p = u/v in lowest terms
  unsigned long u() const { return value().get_num().get_ui(); }
  unsigned long v() const { return value().get_den().get_ui(); }

  std::string format() const { return inf_ ? "inf" : p_.get_str(); }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

 private:
  bool inf_ = false;
  Rational p_;
};

}  // namespace baernstein
