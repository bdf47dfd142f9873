#pragma once

// Ordinals in Cantor normal form,
//   a = w^e1*c1 + ... + w^ek*ck   with e1 > ... > ek and ci >= 1,
// with comparison, zero/successor/limit classification and the standard
// assignment of fundamental sequences:
//   (g + w^(d+1))[n] = g + w^d * n,   (g + w^l)[n] = g + w^(l[n])  (l limit).
// Literals look like "w^2*3 + w*2 + 5"; parsing rejects non-canonical input
// instead of normalizing it.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace baernstein {

namespace detail {
// templated so the recursive exponent field only instantiates once Ordinal
// is a complete type
template <class O>
struct OrdinalTerm {
  O exponent;
  std::uint64_t coeff = 1;
};
}  // namespace detail

class Ordinal {
 public:
  using Term = detail::OrdinalTerm<Ordinal>;

  enum class Kind { zero, successor, limit };

  Ordinal() = default;  // zero

  static Ordinal natural(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back({Ordinal(), n});
    return o;
  }
  static Ordinal omega() { return omega_power(natural(1)); }
  static Ordinal omega_power(Ordinal exp, std::uint64_t coeff = 1) {
    if (coeff == 0) throw std::invalid_argument("ordinal: zero coefficient");
    Ordinal o;
    o.terms_.push_back({std::move(exp), coeff});
    return o;
  }
  static Ordinal from_terms(std::vector<Term> terms) {
    Ordinal o;
    o.terms_ = std::move(terms);
    o.validate();
    return o;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Kind kind() const {
    if (terms_.empty()) return Kind::zero;
    return terms_.back().exponent.is_zero() ? Kind::successor : Kind::limit;
  }

  // exact value when the ordinal is a natural number
  std::optional<std::uint64_t> natural_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coeff;
    return std::nullopt;
  }

  static int compare(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      int c = compare(x[i].exponent, y[i].exponent);
      if (c != 0) return c;
      if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? -1 : 1;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  }

  friend bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != 0; }
  friend bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Ordinal& a, const Ordinal& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Ordinal& a, const Ordinal& b) { return compare(a, b) >= 0; }

  Ordinal successor() const {
    Ordinal o = *this;
    if (!o.terms_.empty() && o.terms_.back().exponent.is_zero())
      o.terms_.back().coeff += 1;
    else
      o.terms_.push_back({Ordinal(), 1});
    return o;
  }

  // pre: kind() == successor
  Ordinal predecessor() const {
    if (kind() != Kind::successor) throw std::invalid_argument("ordinal: predecessor of non-successor");
    Ordinal o = *this;
    if (o.terms_.back().coeff > 1)
      o.terms_.back().coeff -= 1;
    else
      o.terms_.pop_back();
    return o;
  }

  // n-th element (n >= 1) of the fundamental sequence; pre: kind() == limit
  Ordinal fundamental(std::uint64_t n) const {
    if (kind() != Kind::limit) throw std::invalid_argument("ordinal: fundamental sequence of non-limit");
    if (n < 1) throw std::invalid_argument("ordinal: fundamental index must be >= 1");
    Ordinal prefix = *this;
    Term last = prefix.terms_.back();
    if (last.coeff > 1) {
      prefix.terms_.back().coeff -= 1;
    } else {
      prefix.terms_.pop_back();
    }
    const Ordinal& beta = last.exponent;  // limit term: beta > 0
    if (beta.kind() == Kind::successor) {
      Ordinal delta = beta.predecessor();
      if (delta.is_zero())
        prefix.append_natural(n);
      else
        prefix.terms_.push_back({std::move(delta), n});
    } else {
      prefix.terms_.push_back({beta.fundamental(n), 1});
    }
    return prefix;
  }

  std::string format() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      const Term& t = terms_[i];
      if (t.exponent.is_zero()) {
        out += std::to_string(t.coeff);
        continue;
      }
      out += "w";
      if (auto n = t.exponent.natural_value()) {
        if (*n != 1) out += "^" + std::to_string(*n);
      } else {
        out += "^(" + t.exponent.format() + ")";
      }
      if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
    }
    return out;
  }

  static Ordinal parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "0") return Ordinal();
    std::size_t pos = 0;
    Ordinal o = parse_expr(s, pos);
    if (pos != s.size()) throw std::invalid_argument("ordinal: trailing input in '" + text + "'");
    return o;
  }

 private:
  std::vector<Term> terms_;

  void append_natural(std::uint64_t n) {
    if (n > 0) terms_.push_back({Ordinal(), n});
  }

  void validate() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff == 0) throw std::invalid_argument("ordinal: zero coefficient");
      terms_[i].exponent.validate();
      if (i + 1 < terms_.size() && compare(terms_[i].exponent, terms_[i + 1].exponent) <= 0)
        throw std::invalid_argument("ordinal: exponents not strictly decreasing");
    }
  }

  static std::uint64_t parse_number(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("ordinal: expected number at '" + s.substr(pos) + "'");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw std::invalid_argument("ordinal: coefficient overflow");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  static Ordinal parse_expr(const std::string& s, std::size_t& pos) {
    std::vector<Term> terms;
    while (true) {
      terms.push_back(parse_term(s, pos));
      if (pos < s.size() && s[pos] == '+') {
        ++pos;
        continue;
      }
      break;
    }
    return from_terms(std::move(terms));  // rejects non-canonical order
  }

  static Term parse_term(const std::string& s, std::size_t& pos) {
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      Ordinal exp = Ordinal::natural(1);
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos < s.size() && s[pos] == '(') {
          ++pos;
          std::size_t p = pos;
          Ordinal inner = parse_expr(s, p);
          if (p >= s.size() || s[p] != ')') throw std::invalid_argument("ordinal: missing ')'");
          pos = p + 1;
          exp = std::move(inner);
        } else {
          exp = Ordinal::natural(parse_number(s, pos));
        }
        if (exp.is_zero()) throw std::invalid_argument("ordinal: w^0 is not canonical; write the number");
      }
      std::uint64_t coeff = 1;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        coeff = parse_number(s, pos);
        if (coeff == 0) throw std::invalid_argument("ordinal: zero coefficient");
      }
      return {std::move(exp), coeff};
    }
    std::uint64_t n = parse_number(s, pos);
    if (n == 0) throw std::invalid_argument("ordinal: zero term");
    return {Ordinal(), n};
  }
};

}  // namespace baernstein
