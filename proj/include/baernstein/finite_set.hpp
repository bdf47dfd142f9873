#pragma once

// Finite subsets of {1, 2, 3, ...} kept as strictly increasing coordinate
// lists. "E < F" between sets means max E < min F (successive sets); a
// spread of E replaces coordinates by pointwise-larger ones.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace baernstein {

class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<std::int64_t> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1) throw std::invalid_argument("set: coordinates must be >= 1");
      if (i && elems_[i] <= elems_[i - 1])
        throw std::invalid_argument("set: coordinates must be strictly increasing");
    }
  }
  FiniteSet(std::initializer_list<std::int64_t> elems)
      : FiniteSet(std::vector<std::int64_t>(elems)) {}

  const std::vector<std::int64_t>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  std::int64_t min() const {
    if (empty()) throw std::invalid_argument("set: min of empty set");
    return elems_.front();
  }
  std::int64_t max() const {
    if (empty()) throw std::invalid_argument("set: max of empty set");
    return elems_.back();
  }
  std::int64_t at(std::size_t i) const { return elems_.at(i); }

  bool contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  // this extended by m; pre: m > max (or set empty)
  FiniteSet with_appended(std::int64_t m) const {
    if (!empty() && m <= max()) throw std::invalid_argument("set: append must extend");
    FiniteSet r = *this;
    r.elems_.push_back(m);
    return r;
  }

  // first k coordinates
  FiniteSet prefix(std::size_t k) const {
    return FiniteSet(std::vector<std::int64_t>(elems_.begin(), elems_.begin() + std::min(k, size())));
  }
  // coordinates [i, j)
  FiniteSet slice(std::size_t i, std::size_t j) const {
    i = std::min(i, size());
    j = std::min(j, size());
    return FiniteSet(std::vector<std::int64_t>(elems_.begin() + i, elems_.begin() + j));
  }

  bool subset_of(const FiniteSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
  }

  // successive: every coordinate of this precedes every coordinate of o
  // (vacuously true when either is empty)
  bool before(const FiniteSet& o) const {
    return empty() || o.empty() || max() < o.min();
  }

  // same size and pointwise >=
  bool is_spread_of(const FiniteSet& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (elems_[i] < o.elems_[i]) return false;
    return true;
  }

  FiniteSet unite(const FiniteSet& o) const {
    std::vector<std::int64_t> out;
    out.reserve(size() + o.size());
    std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                   std::back_inserter(out));
    return FiniteSet(std::move(out));
  }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.elems_ == b.elems_; }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return a.elems_ != b.elems_; }
  // lexicographic on coordinate lists
  friend bool operator<(const FiniteSet& a, const FiniteSet& b) { return a.elems_ < b.elems_; }

  // bitmask key when all coordinates are <= 64 (fast memo path)
  std::optional<std::uint64_t> small_key() const {
    if (!empty() && max() > 64) return std::nullopt;
    std::uint64_t k = 0;
    for (auto v : elems_) k |= std::uint64_t(1) << (v - 1);
    return k;
  }

  std::string format() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems_[i]);
    }
    return out + "}";
  }

  // parses "{2,3,7}" (whitespace-insensitive); rejects non-increasing lists
  static FiniteSet parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
      throw std::invalid_argument("set: expected {a,b,...}");
    s = s.substr(1, s.size() - 2);
    std::vector<std::int64_t> elems;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("set: empty element");
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("set: bad element '" + tok + "'");
      if (tok.size() > 18) throw std::invalid_argument("set: element too large");
      elems.push_back(std::stoll(tok));
      pos = comma == std::string::npos ? s.size() : comma + 1;
    }
    return FiniteSet(std::move(elems));
  }

 private:
  std::vector<std::int64_t> elems_;
};

struct FiniteSetHash {
  std::size_t operator()(const FiniteSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : s.elements()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// All spreads G of E with coordinates <= bound, in lexicographic order.
inline void for_each_spread(const FiniteSet& e, std::int64_t bound,
                            const std::function<void(const FiniteSet&)>& fn) {
  std::vector<std::int64_t> cur(e.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == e.size()) {
      fn(FiniteSet(cur));
      return;
    }
    std::int64_t lo = std::max(e.at(i), i ? cur[i - 1] + 1 : std::int64_t(1));
    std::int64_t room = static_cast<std::int64_t>(e.size() - 1 - i);  // space for the tail
    for (std::int64_t v = lo; v + room <= bound; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace baernstein
