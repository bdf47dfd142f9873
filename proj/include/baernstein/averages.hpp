#pragma once

// The repeated-averages hierarchy over an increasing index stream I:
//
//   level 0:    x_n = e_{i_n}
//   level a+1:  x_N = (1/s_N) * (next s_N level-a vectors), where s_N is the
//               stream value opening the group (= min supp of its first
//               vector, because supports tile the stream)
//   limit a:    x_N = the first vector at level a[m_N]+1 over the remaining
//               stream, m_N = its least element
//
// Everything is exact; support sizes explode with the level, so generation
// charges a per-entry budget and raises budget_error rather than thrash.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/limits.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/schreier.hpp"
#include "baernstein/vector.hpp"

namespace baernstein {

// finite prefix + geometric tail (the only built-in growth rule)
struct IndexStream {
  std::vector<std::int64_t> prefix{1};
  std::int64_t ratio = 3;
  bool require_triple_growth = false;  // validated on construction of a cursor

  static IndexStream geometric(std::vector<std::int64_t> prefix, std::int64_t ratio = 3,
                               bool triple = false) {
    IndexStream s;
    s.prefix = std::move(prefix);
    s.ratio = ratio;
    s.require_triple_growth = triple;
    return s;
  }

  nlohmann::json to_json() const {
    return {{"prefix", prefix}, {"rule", "geometric"}, {"ratio", ratio},
            {"triple_growth", require_triple_growth}};
  }

  static IndexStream from_json(const nlohmann::json& j) {
    IndexStream s;
    if (!j.is_object() || !j.contains("prefix") || !j["prefix"].is_array())
      throw std::invalid_argument("stream: expected {\"prefix\": [...], ...}");
    s.prefix.clear();
    for (const auto& v : j["prefix"]) {
      if (!v.is_number_integer()) throw std::invalid_argument("stream: prefix must be integers");
      s.prefix.push_back(v.get<std::int64_t>());
    }
    if (j.contains("rule") && j["rule"].get<std::string>() != "geometric")
      throw std::invalid_argument("stream: unknown growth rule");
    if (j.contains("ratio")) s.ratio = j["ratio"].get<std::int64_t>();
    if (j.contains("triple_growth")) s.require_triple_growth = j["triple_growth"].get<bool>();
    return s;
  }
};

class StreamCursor {
 public:
  explicit StreamCursor(const IndexStream& s) : stream_(s) {
    if (stream_.prefix.empty()) throw std::invalid_argument("stream: empty prefix");
    if (stream_.ratio < 2) throw std::invalid_argument("stream: ratio must be >= 2");
    for (std::size_t i = 0; i < stream_.prefix.size(); ++i) {
      if (stream_.prefix[i] < 1) throw std::invalid_argument("stream: indices must be >= 1");
      if (i && stream_.prefix[i] <= stream_.prefix[i - 1])
        throw std::invalid_argument("stream: indices must be strictly increasing");
      if (i && stream_.require_triple_growth && stream_.prefix[i] < 3 * stream_.prefix[i - 1])
        throw std::invalid_argument("stream: triple growth violated in prefix");
    }
    if (stream_.require_triple_growth && stream_.ratio < 3)
      throw std::invalid_argument("stream: triple growth needs ratio >= 3");
  }

  std::int64_t peek() { return value_at(idx_); }
  std::int64_t next() { return value_at(idx_++); }
  std::int64_t consumed() const { return static_cast<std::int64_t>(idx_); }
  std::int64_t last_drawn() const {
    if (idx_ == 0) throw std::invalid_argument("stream: nothing drawn yet");
    return values_[idx_ - 1];
  }

 private:
  IndexStream stream_;
  std::vector<std::int64_t> values_;
  std::size_t idx_ = 0;

  std::int64_t value_at(std::size_t k) {
    while (values_.size() <= k) {
      if (values_.size() < stream_.prefix.size()) {
        values_.push_back(stream_.prefix[values_.size()]);
      } else {
        std::int64_t next_v;
        if (__builtin_mul_overflow(values_.back(), stream_.ratio, &next_v))
          throw budget_error("stream: index overflows 64 bits");
        values_.push_back(next_v);
      }
    }
    return values_[k];
  }
};

namespace detail {

class AverageGenerator {
 public:
  AverageGenerator(Ordinal level, StreamCursor& cur, std::int64_t& remaining)
      : level_(std::move(level)), cur_(&cur), remaining_(&remaining) {}

  RationalVector next() {
    switch (level_.kind()) {
      case Ordinal::Kind::zero: {
        if (*remaining_ <= 0) throw budget_error("averages: entry budget exhausted");
        --*remaining_;
        return RationalVector::unit(cur_->next());
      }
      case Ordinal::Kind::successor: {
        if (!child_)
          child_ = std::make_unique<AverageGenerator>(level_.predecessor(), *cur_, *remaining_);
        RationalVector first = child_->next();
        std::int64_t s = first.support().min();  // group size = opening stream value
        // each remaining child costs at least one entry: doomed groups die here
        if (s - 1 > *remaining_) throw budget_error("averages: entry budget exhausted");
        std::vector<RationalVector::Entry> acc(first.entries().begin(), first.entries().end());
        for (std::int64_t j = 1; j < s; ++j) {
          RationalVector nxt = child_->next();
          if (acc.back().first >= nxt.entries().front().first)
            throw std::logic_error("averages: child supports not successive");
          acc.insert(acc.end(), nxt.entries().begin(), nxt.entries().end());
        }
        return RationalVector::from_entries(std::move(acc)).scaled(make_rational(1, s));
      }
      case Ordinal::Kind::limit: {
        std::int64_t m = cur_->peek();
        Ordinal sub = level_.fundamental(static_cast<std::uint64_t>(m)).successor();
        AverageGenerator fresh(std::move(sub), *cur_, *remaining_);
        return fresh.next();
      }
    }
    throw std::logic_error("averages: bad ordinal kind");
  }

 private:
  Ordinal level_;
  StreamCursor* cur_;
  std::int64_t* remaining_;
  std::unique_ptr<AverageGenerator> child_;
};

}  // namespace detail

struct AveragePrefix {
  Ordinal alpha;
  IndexStream stream;
  std::vector<RationalVector> vectors;
  std::int64_t consumed = 0;  // stream elements drawn

  nlohmann::json to_json() const {
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& v : vectors) vecs.push_back(v.to_json());
    return {{"alpha", alpha.format()}, {"stream", stream.to_json()},
            {"vectors", std::move(vecs)}, {"consumed", consumed}};
  }
};

// Generates the first n vectors and asserts the three structural facts:
// exact convexity, successive supports tiling an initial stream segment,
// and support maximality in the family.
inline AveragePrefix generate_averages(const Ordinal& alpha, const IndexStream& stream,
                                       std::int64_t n, const Limits& lim = Limits{}) {
  if (n < 1) throw std::invalid_argument("averages: need n >= 1");
  StreamCursor cur(stream);
  std::int64_t remaining = lim.entry_budget;
  detail::AverageGenerator gen(alpha, cur, remaining);
  SchreierFamily fam(alpha);

  AveragePrefix out;
  out.alpha = alpha;
  out.stream = stream;
  std::int64_t prev_max = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t consumed_before = cur.consumed();
    RationalVector x = gen.next();
    Rational mass(0);
    for (const auto& [pos, val] : x.entries()) {
      if (val <= 0) throw std::logic_error("averages: non-positive coefficient");
      mass += val;
    }
    if (mass != 1) throw std::logic_error("averages: coefficients do not sum to 1");
    FiniteSet supp = x.support();
    if (supp.min() <= prev_max) throw std::logic_error("averages: supports not successive");
    if (cur.consumed() - consumed_before != static_cast<std::int64_t>(supp.size()) ||
        cur.last_drawn() != supp.max())
      throw std::logic_error("averages: support does not tile the stream");
    prev_max = supp.max();
    if (!fam.is_maximal(supp, lim.maximality_window))
      throw std::logic_error("averages: support not maximal in the family");
    out.vectors.push_back(std::move(x));
  }
  out.consumed = cur.consumed();
  return out;
}

struct L1BoundOutcome {
  Rational max_mass;
  FiniteSet witness;        // lex-least maximizing member
  bool pass = false;        // max <= 2
  std::int64_t members_checked = 0;
  std::int64_t n_sum = 0;
  std::int64_t truncation = 0;
};

// Exhaustive check of sup_{E member, E within truncation} |E(sum of the
// first n_sum vectors)|_1 <= 2. Requires the stream's triple-growth flag
// (that is the hypothesis of the bound).
inline L1BoundOutcome lemma31_check(const AveragePrefix& prefix, std::int64_t n_sum,
                                    std::int64_t truncation, const Limits& lim = Limits{}) {
  if (n_sum < 1 || n_sum > static_cast<std::int64_t>(prefix.vectors.size()))
    throw std::invalid_argument("l1 bound: n_sum exceeds the generated prefix");
  if (!prefix.stream.require_triple_growth)
    throw std::invalid_argument("l1 bound: stream must carry the triple-growth flag");

  RationalVector z;
  for (std::int64_t i = 0; i < n_sum; ++i) z += prefix.vectors[i];

  SchreierFamily fam(prefix.alpha);
  L1BoundOutcome out;
  out.max_mass = 0;
  out.n_sum = n_sum;
  out.truncation = truncation;
  fam.for_each_member(
      truncation,
      [&](const FiniteSet& e) {
        ++out.members_checked;
        Rational m = z.mass_on(e);
        if (m > out.max_mass) {
          out.max_mass = std::move(m);
          out.witness = e;
        }
      },
      lim);
  out.pass = out.max_mass <= 2;
  return out;
}

}  // namespace baernstein
