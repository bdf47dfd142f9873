#pragma once

// Reference implementations used to cross-check the production evaluators.
// Deliberately naive: membership tries every decomposition split instead of
// the greedy one; the norm oracle enumerates every successive-block
// partition with no dynamic programming and never abandons an extension
// early; the blocking oracle ranges over every integer cut sequence, not
// just cuts at support boundaries. Exactness over speed throughout.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "baernstein/exponent.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/norm_value.hpp"
#include "baernstein/norms.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/vector.hpp"

namespace baernstein::oracle {

// membership by exhaustive decomposition search (memoized on (index, set))
class MembershipOracle {
 public:
  bool member(const Ordinal& a, const FiniteSet& e) {
    if (e.empty()) return true;
    auto& slot = memo_[a];
    auto it = slot.find(e.elements());
    if (it != slot.end()) return it->second;
    bool ans = false;
    switch (a.kind()) {
      case Ordinal::Kind::zero:
        ans = e.size() == 1;
        break;
      case Ordinal::Kind::successor: {
        Ordinal b = a.predecessor();
        std::int64_t max_blocks = e.min();
        auto rec = [&](auto&& self, std::size_t idx, std::int64_t used) -> bool {
          if (idx == e.size()) return true;
          if (used == max_blocks) return false;
          for (std::size_t len = 1; idx + len <= e.size(); ++len)
            if (member(b, e.slice(idx, idx + len)) && self(self, idx + len, used + 1))
              return true;
          return false;
        };
        ans = rec(rec, 0, 0);
        break;
      }
      case Ordinal::Kind::limit: {
        for (std::int64_t n = 1; n <= e.min() && !ans; ++n)
          ans = member(a.fundamental(static_cast<std::uint64_t>(n)).successor(), e);
        break;
      }
    }
    slot.emplace(e.elements(), ans);
    return ans;
  }

 private:
  std::map<Ordinal, std::map<std::vector<std::int64_t>, bool>> memo_;
};

using MemberFn = std::function<bool(const FiniteSet&)>;

// sup of the l1 mass over member subsets of the support, by full subset
// enumeration (support <= 20)
inline Rational schreier_norm(const MemberFn& member, const RationalVector& x) {
  const auto& es = x.entries();
  if (es.size() > 20) throw std::invalid_argument("oracle: support too large");
  Rational best(0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << es.size()); ++mask) {
    std::vector<std::int64_t> elems;
    Rational m(0);
    for (std::size_t i = 0; i < es.size(); ++i)
      if ((mask >> i) & 1) {
        elems.push_back(es[i].first);
        m += rational_abs(es[i].second);
      }
    if (m > best && member(FiniteSet(std::move(elems)))) best = std::move(m);
  }
  return best;
}

// sup over ALL finite sequences of successive member blocks of the l_p
// aggregate of block masses; integer p (p-th power returned) or p = inf
inline NormValue baernstein_norm(const MemberFn& member, const Exponent& p,
                                 const RationalVector& x) {
  if (!p.is_infinite() && !p.is_integer())
    throw std::invalid_argument("oracle: integer or infinite p only");
  const auto& es = x.entries();
  Rational best(0);
  // acc: sum of mass^p (finite p) or max mass (p = inf)
  auto rec = [&](auto&& self, std::size_t from, const Rational& acc) -> void {
    if (acc > best) best = acc;
    for (std::size_t i = from; i < es.size(); ++i) {
      // every member block whose least element is position i
      std::vector<std::int64_t> blk{es[i].first};
      auto grow = [&](auto&& gself, std::vector<std::int64_t>& b, const Rational& mass,
                      std::size_t last) -> void {
        if (member(FiniteSet(b))) {
          Rational next_acc = p.is_infinite() ? (mass > acc ? mass : acc)
                                              : Rational(acc + pow_ui(mass, p.u()));
          self(self, last + 1, next_acc);
        }
        for (std::size_t j = last + 1; j < es.size(); ++j) {
          b.push_back(es[j].first);
          gself(gself, b, mass + rational_abs(es[j].second), j);
          b.pop_back();
        }
      };
      grow(grow, blk, rational_abs(es[i].second), i);
    }
  };
  rec(rec, 0, Rational(0));
  if (p.is_infinite() || p.is_one()) return NormValue::exact(best);
  return NormValue::pth_power(best, p);
}

// the blocking norm over EVERY integer cut sequence 1 <= k_0 < ... < k_r
// bounded by max supp + 1, pieces [k_{j-1}, k_j) placed at k_{j-1};
// validates both the cut-at-support-boundaries reduction and the
// piece-minimum placement of the production evaluator
inline NormValue composite_full(NormEvaluator& ev, const NormDescriptor& inner,
                                const NormDescriptor& outer, const RationalVector& x) {
  if (x.is_zero()) return NormValue::exact(Rational(0));
  std::int64_t hi = x.support().max() + 1;
  if (hi > 22) throw std::invalid_argument("oracle: blocking span too large");
  std::optional<NormValue> best;
  std::vector<std::int64_t> cuts;
  auto consider = [&]() {
    if (cuts.size() < 2) return;
    std::vector<NormValue> vals;
    std::vector<RationalVector::Entry> placed;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      RationalVector piece = x.restricted_range(cuts[j], cuts[j + 1] - 1);
      NormValue v = ev.evaluate(inner, piece).value;
      vals.push_back(v);
      if (v.is_exact()) placed.emplace_back(cuts[j], v.exact_value());
    }
    NormValue total;
    if (outer.kind == NormDescriptor::Kind::lp) {
      total = lp_aggregate(outer.p, vals, ev.limits());
    } else {
      if (placed.size() != vals.size())
        throw std::invalid_argument("oracle: non-exact pieces under a schreier outer norm");
      total = ev.schreier_norm(outer.alpha, RationalVector::from_entries(std::move(placed))).value;
    }
    if (!best) {
      best = std::move(total);
      return;
    }
    auto c = NormValue::exact_compare(total, *best);
    if (c && *c > 0) best = std::move(total);
  };
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    consider();
    for (std::int64_t k = from; k <= hi; ++k) {
      cuts.push_back(k);
      self(self, k + 1);
      cuts.pop_back();
    }
  };
  rec(rec, 1);
  return *best;
}

}  // namespace baernstein::oracle
