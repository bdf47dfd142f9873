#pragma once

// The transfinite Schreier hierarchy. For a Cantor-normal-form index a:
//
//   S_0     = {{}} plus all singletons,
//   S_(b+1) = unions of n successive S_b sets E_1 < ... < E_n with n <= min E_1,
//   S_l     = { E : E is in S_(l[n]+1) for some n <= min E }   (l a limit),
//
// where l[n] is the fundamental sequence. Every family is hereditary and
// spreading (audited, not assumed), so membership of a nonempty set splits
// greedily: successive blocks of a partition are contiguous runs of the
// sorted coordinates, and taking the longest member prefix each time
// minimises the number of blocks.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/limits.hpp"
#include "baernstein/ordinal.hpp"

namespace baernstein {

struct AuditResult {
  bool hereditary_ok = true;
  bool spreading_ok = true;
  bool successor_ok = true;
  std::int64_t member_count = 0;
  std::int64_t hereditary_checks = 0;
  std::int64_t spreading_checks = 0;
  std::int64_t successor_checks = 0;
  std::int64_t nesting_checks = 0;
  bool exhaustive_subsets = true;  // full power-set / full spread enumeration used
  std::vector<std::pair<FiniteSet, FiniteSet>> hereditary_failures;  // (member, missing subset)
  std::vector<std::pair<FiniteSet, FiniteSet>> spreading_failures;   // (member, missing spread)
  std::vector<FiniteSet> successor_failures;
  struct NestingFinding {
    std::uint64_t n = 0, m = 0;
    FiniteSet witness;
  };
  std::vector<NestingFinding> nesting_findings;  // informational only
  bool pass() const { return hereditary_ok && spreading_ok && successor_ok; }
};

class SchreierFamily {
 public:
  explicit SchreierFamily(Ordinal alpha)
      : alpha_(std::move(alpha)), cache_(std::make_shared<Cache>()) {}

  const Ordinal& index() const { return alpha_; }

  bool contains(const FiniteSet& e) const { return member(alpha_, e); }

  // a family sharing this handle's membership cache
  SchreierFamily relative(Ordinal alpha) const { return SchreierFamily(std::move(alpha), cache_); }

  // pre: e is a member. A member is maximal when no strictly larger
  // coordinate extends it inside the family; `window` consecutive probe
  // values are tried (membership of E+{m} does not depend on the value
  // m > max E for these families — the window exists to audit that).
  bool is_maximal(const FiniteSet& e, int window = 1) const {
    if (!contains(e)) throw std::invalid_argument("family: maximality of a non-member");
    std::int64_t base = e.empty() ? 0 : e.max();
    for (int d = 1; d <= window; ++d)
      if (member(alpha_, e.with_appended(base + d))) return false;
    return true;
  }

  // pre: e member, start > max e (start >= 1). Repeatedly appends the
  // smallest admissible coordinate >= start until maximal.
  FiniteSet maximal_extension(FiniteSet e, std::int64_t start, const Limits& lim = Limits{},
                              int window = 1) const {
    if (start < 1 || (!e.empty() && start <= e.max()))
      throw std::invalid_argument("family: extension start must exceed max E");
    if (!contains(e)) throw std::invalid_argument("family: extension of a non-member");
    std::int64_t cand = start;
    while (true) {
      bool extended = false;
      for (int d = 0; d < window; ++d) {
        FiniteSet probe = e.with_appended(cand + d);
        if (member(alpha_, probe)) {
          e = std::move(probe);
          cand = cand + d + 1;
          extended = true;
          break;
        }
      }
      if (!extended) return e;
      if (static_cast<std::int64_t>(e.size()) > lim.entry_budget)
        throw budget_error("family: maximal extension exceeds the entry budget");
    }
  }

  // Members contained in {1..n}, visited in lexicographic order (the DFS
  // needs only the hereditary prefix property: every prefix of a member is
  // a member).
  void for_each_member(std::int64_t n, const std::function<void(const FiniteSet&)>& fn,
                       const Limits& lim = Limits{}) const {
    if (n < 0) throw std::invalid_argument("family: negative truncation");
    if (n > lim.enumeration_ceiling)
      throw budget_error("family: truncation exceeds the enumeration ceiling");
    FiniteSet empty;
    fn(empty);
    auto rec = [&](auto&& self, const FiniteSet& e) -> void {
      for (std::int64_t m = e.empty() ? 1 : e.max() + 1; m <= n; ++m) {
        FiniteSet ext = e.with_appended(m);
        if (contains(ext)) {
          fn(ext);
          self(self, ext);
        }
      }
    };
    rec(rec, empty);
  }

  std::vector<FiniteSet> members_within(std::int64_t n, const Limits& lim = Limits{}) const {
    std::vector<FiniteSet> out;
    for_each_member(n, [&](const FiniteSet& e) { out.push_back(e); }, lim);
    return out;
  }

  // Exhaustive structural audit over {1..n}: (a) hereditary, (b) spreading,
  // (c) containment in the successor family, (d) for limit indices, nesting
  // of the approximating subfamilies (informational). For n <= 12 the
  // subset/spread checks run over the full power set; beyond that the
  // equivalent one-step closures are used.
  AuditResult audit(std::int64_t n, const Limits& lim = Limits{}) const {
    AuditResult r;
    r.exhaustive_subsets = n <= 12;
    std::vector<FiniteSet> members = members_within(n, lim);
    r.member_count = static_cast<std::int64_t>(members.size());
    SchreierFamily succ = relative(alpha_.successor());

    for (const FiniteSet& e : members) {
      if (e.empty()) continue;
      if (r.exhaustive_subsets) {
        const auto& v = e.elements();
        for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << v.size()); ++mask) {
          std::vector<std::int64_t> sub;
          for (std::size_t i = 0; i < v.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(v[i]);
          FiniteSet f(std::move(sub));
          ++r.hereditary_checks;
          if (!contains(f)) {
            r.hereditary_ok = false;
            if (r.hereditary_failures.size() < 16) r.hereditary_failures.emplace_back(e, f);
          }
        }
        for_each_spread(e, n, [&](const FiniteSet& g) {
          ++r.spreading_checks;
          if (!contains(g)) {
            r.spreading_ok = false;
            if (r.spreading_failures.size() < 16) r.spreading_failures.emplace_back(e, g);
          }
        });
      } else {
        // one-element removals and single raises generate the full closures
        const auto& v = e.elements();
        for (std::size_t i = 0; i < v.size(); ++i) {
          std::vector<std::int64_t> sub;
          for (std::size_t j = 0; j < v.size(); ++j)
            if (j != i) sub.push_back(v[j]);
          FiniteSet f(std::move(sub));
          ++r.hereditary_checks;
          if (!contains(f)) {
            r.hereditary_ok = false;
            if (r.hereditary_failures.size() < 16) r.hereditary_failures.emplace_back(e, f);
          }
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
          std::int64_t up = v[i] + 1;
          if (up > n || (i + 1 < v.size() && up >= v[i + 1])) continue;
          std::vector<std::int64_t> raised = v;
          raised[i] = up;
          FiniteSet g(std::move(raised));
          ++r.spreading_checks;
          if (!contains(g)) {
            r.spreading_ok = false;
            if (r.spreading_failures.size() < 16) r.spreading_failures.emplace_back(e, g);
          }
        }
      }
      ++r.successor_checks;
      if (!succ.contains(e)) {
        r.successor_ok = false;
        if (r.successor_failures.size() < 16) r.successor_failures.push_back(e);
      }
    }

    if (alpha_.kind() == Ordinal::Kind::limit) {
      for (std::uint64_t nn = 1; static_cast<std::int64_t>(nn) <= n; ++nn) {
        SchreierFamily approx = relative(alpha_.fundamental(nn).successor());
        std::vector<FiniteSet> approx_members = approx.members_within(n, lim);
        for (std::uint64_t mm = nn + 1; static_cast<std::int64_t>(mm) <= n; ++mm) {
          SchreierFamily upper = relative(alpha_.fundamental(mm));
          for (const FiniteSet& e : approx_members) {
            ++r.nesting_checks;
            if (!upper.contains(e) && r.nesting_findings.size() < 64)
              r.nesting_findings.push_back({nn, mm, e});
          }
        }
      }
    }
    return r;
  }

 private:
  struct Slot {
    std::unordered_map<std::uint64_t, bool> small;
    std::unordered_map<FiniteSet, bool, FiniteSetHash> big;
  };
  struct Cache {
    std::mutex mu;
    std::map<Ordinal, std::size_t> ids;
    std::vector<std::unique_ptr<Slot>> slots;
  };

  Ordinal alpha_;
  std::shared_ptr<Cache> cache_;

  SchreierFamily(Ordinal alpha, std::shared_ptr<Cache> cache)
      : alpha_(std::move(alpha)), cache_(std::move(cache)) {}

  Slot& slot_for(const Ordinal& a) const {
    std::lock_guard<std::mutex> g(cache_->mu);
    auto [it, inserted] = cache_->ids.try_emplace(a, cache_->slots.size());
    if (inserted) cache_->slots.push_back(std::make_unique<Slot>());
    return *cache_->slots[it->second];
  }

  bool member(const Ordinal& a, const FiniteSet& e) const {
    if (e.empty()) return true;
    if (a.is_zero()) return e.size() == 1;

    Slot& slot = slot_for(a);
    auto key = e.small_key();
    {
      std::lock_guard<std::mutex> g(cache_->mu);
      if (key) {
        if (auto it = slot.small.find(*key); it != slot.small.end()) return it->second;
      } else {
        if (auto it = slot.big.find(e); it != slot.big.end()) return it->second;
      }
    }

    bool res;
    if (a.kind() == Ordinal::Kind::successor) {
      Ordinal b = a.predecessor();
      std::size_t pieces = 0, i = 0;
      while (i < e.size()) {
        // longest prefix of the remaining run that is a member of S_b;
        // prefix membership is monotone (hereditary), so bisect
        std::size_t lo = i + 1, hi = e.size();
        if (!member(b, e.slice(i, lo))) {
          pieces = e.size() + 1;  // cannot happen: singletons belong everywhere
          break;
        }
        while (lo < hi) {
          std::size_t mid = lo + (hi - lo + 1) / 2;
          if (member(b, e.slice(i, mid)))
            lo = mid;
          else
            hi = mid - 1;
        }
        ++pieces;
        i = lo;
      }
      res = static_cast<std::int64_t>(pieces) <= e.min();
    } else {
      res = false;
      constexpr std::int64_t kLimitBranchCap = 1'000'000;
      if (e.min() > kLimitBranchCap)
        throw budget_error("family: limit-stage index search exceeds its budget");
      for (std::int64_t n = 1; n <= e.min(); ++n) {
        if (member(a.fundamental(static_cast<std::uint64_t>(n)).successor(), e)) {
          res = true;
          break;
        }
      }
    }

    {
      std::lock_guard<std::mutex> g(cache_->mu);
      if (key)
        slot.small.emplace(*key, res);
      else
        slot.big.emplace(e, res);
    }
    return res;
  }
};

}  // namespace baernstein
