#pragma once

// Finitely supported rational vectors over coordinates 1,2,3,...
// Stored as (index, value) pairs, strictly increasing indices, no zeros.
//
// Wire format: {"coords":[{"i":3,"num":1,"den":3}, ...]}
// num/den are JSON numbers when they fit in 64 bits, decimal strings
// otherwise. Input must be canonical: den >= 1, gcd(num,den) = 1, num != 0,
// indices strictly increasing.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "baernstein/finite_set.hpp"
#include "baernstein/rational.hpp"

namespace baernstein {

class RationalVector {
 public:
  using Entry = std::pair<std::int64_t, Rational>;

  RationalVector() = default;

  static RationalVector unit(std::int64_t i) {
    RationalVector x;
    if (i < 1) throw std::invalid_argument("vector: index must be >= 1");
    x.entries_.emplace_back(i, Rational(1));
    return x;
  }

  // entries must come sorted by index; zeros are dropped, duplicates rejected
  static RationalVector from_entries(std::vector<Entry> es) {
    RationalVector x;
    for (auto& [i, v] : es) {
      if (i < 1) throw std::invalid_argument("vector: index must be >= 1");
      if (!x.entries_.empty() && x.entries_.back().first >= i)
        throw std::invalid_argument("vector: indices not strictly increasing");
      if (v != 0) x.entries_.emplace_back(i, std::move(v));
    }
    return x;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  Rational coeff(std::int64_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::int64_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Rational(0);
  }

  FiniteSet support() const {
    std::vector<std::int64_t> idx;
    idx.reserve(entries_.size());
    for (const auto& [i, v] : entries_) idx.push_back(i);
    return FiniteSet(std::move(idx));
  }

  RationalVector operator+(const RationalVector& o) const {
    RationalVector r;
    std::size_t a = 0, b = 0;
    while (a < entries_.size() || b < o.entries_.size()) {
      if (b == o.entries_.size() ||
          (a < entries_.size() && entries_[a].first < o.entries_[b].first)) {
        r.entries_.push_back(entries_[a++]);
      } else if (a == entries_.size() || o.entries_[b].first < entries_[a].first) {
        r.entries_.push_back(o.entries_[b++]);
      } else {
        Rational s = entries_[a].second + o.entries_[b].second;
        if (s != 0) r.entries_.emplace_back(entries_[a].first, std::move(s));
        ++a, ++b;
      }
    }
    return r;
  }
  RationalVector& operator+=(const RationalVector& o) { return *this = *this + o; }

  RationalVector scaled(const Rational& c) const {
    RationalVector r;
    if (c == 0) return r;
    r.entries_ = entries_;
    for (auto& [i, v] : r.entries_) v *= c;
    return r;
  }

  // restriction to a coordinate set (the E-projection)
  RationalVector restricted(const FiniteSet& e) const {
    RationalVector r;
    for (const auto& [i, v] : entries_)
      if (e.contains(i)) r.entries_.emplace_back(i, v);
    return r;
  }

  // restriction to the index interval [lo, hi]
  RationalVector restricted_range(std::int64_t lo, std::int64_t hi) const {
    RationalVector r;
    for (const auto& [i, v] : entries_)
      if (lo <= i && i <= hi) r.entries_.emplace_back(i, v);
    return r;
  }

  // same coefficients in order, moved onto the given support (equal sizes)
  RationalVector replanted(const FiniteSet& target) const {
    if (target.size() != entries_.size())
      throw std::invalid_argument("vector: replant needs equal support sizes");
    RationalVector r;
    r.entries_.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k)
      r.entries_.emplace_back(target.at(k), entries_[k].second);
    return r;
  }

  Rational l1_mass() const {
    Rational s(0);
    for (const auto& [i, v] : entries_) s += rational_abs(v);
    return s;
  }

  // sum of |x_i| over i in e
  Rational mass_on(const FiniteSet& e) const {
    Rational s(0);
    if (e.size() < entries_.size()) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        Rational v = coeff(e.at(k));
        if (v != 0) s += rational_abs(v);
      }
    } else {
      for (const auto& [i, v] : entries_)
        if (e.contains(i)) s += rational_abs(v);
    }
    return s;
  }

  bool operator==(const RationalVector& o) const { return entries_ == o.entries_; }
  bool operator!=(const RationalVector& o) const { return !(*this == o); }

  nlohmann::json to_json() const {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& [i, v] : entries_) {
      nlohmann::json c;
      c["i"] = i;
      c["num"] = int_token(v.get_num());
      c["den"] = int_token(v.get_den());
      coords.push_back(std::move(c));
    }
    return nlohmann::json{{"coords", std::move(coords)}};
  }

  static RationalVector from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
      throw std::invalid_argument("vector: expected {\"coords\": [...]}");
    std::vector<Entry> es;
    for (const auto& c : j["coords"]) {
      if (!c.is_object() || !c.contains("i") || !c.contains("num") || !c.contains("den"))
        throw std::invalid_argument("vector: coord needs i, num, den");
      std::int64_t i = read_index(c["i"]);
      BigInt num = read_int(c["num"]);
      BigInt den = read_int(c["den"]);
      if (den < 1) throw std::invalid_argument("vector: den must be >= 1");
      if (num == 0) throw std::invalid_argument("vector: zero coordinate listed");
      BigInt g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) throw std::invalid_argument("vector: num/den not in lowest terms");
      Rational v(num, den);  // already canonical
      es.emplace_back(i, std::move(v));
    }
    return from_entries(std::move(es));
  }

  static RationalVector parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("vector: bad JSON: ") + e.what());
    }
    return from_json(j);
  }

  std::string format() const {
    std::string s = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ", ";
      s += "e" + std::to_string(entries_[k].first) + "*" + entries_[k].second.get_str();
    }
    return s + ")";
  }

 private:
  std::vector<Entry> entries_;

  static nlohmann::json int_token(const BigInt& z) {
    if (z.fits_slong_p()) {
      long v = z.get_si();
      return nlohmann::json(static_cast<std::int64_t>(v));
    }
    return nlohmann::json(z.get_str());
  }

  static BigInt read_int(const nlohmann::json& t) {
    if (t.is_number_integer()) return BigInt(static_cast<long>(t.get<std::int64_t>()));
    if (t.is_string()) return detail::parse_integer(t.get<std::string>());
    throw std::invalid_argument("vector: num/den must be integer or string");
  }

  static std::int64_t read_index(const nlohmann::json& t) {
    if (!t.is_number_integer())
      throw std::invalid_argument("vector: index must be an integer");
    std::int64_t i = t.get<std::int64_t>();
    if (i < 1) throw std::invalid_argument("vector: index must be >= 1");
    return i;
  }
};

}  // namespace baernstein
