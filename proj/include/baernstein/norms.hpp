#pragma once

// Exact evaluators for the three norm layers:
//
//   schreier_norm     sup over family members E of the l1 mass on E
//   baernstein_norm   sup over successive member blocks E_1<E_2<... of the
//                     l_p aggregate of block masses
//   composite_norm    sup over interval blockings: inner norm per piece,
//                     outer norm of the piece values placed at piece minima
//
// plus a seeded falsifier for domination / block-estimate claims.
//
// The evaluators assume (and the test suite audits) that membership of
// E+{m} for m > max E does not depend on the value of m; that justifies
// abandoning a block extension after the first failing probe.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baernstein/errors.hpp"
#include "baernstein/exponent.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/interval.hpp"
#include "baernstein/limits.hpp"
#include "baernstein/norm_value.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/schreier.hpp"
#include "baernstein/vector.hpp"

namespace baernstein {

// ---------------------------------------------------------------------------
// descriptors

struct NormDescriptor {
  enum class Kind { lp, schreier, baernstein };
  Kind kind = Kind::lp;
  Exponent p;      // lp, baernstein
  Ordinal alpha;   // schreier, baernstein

  static NormDescriptor make_lp(Exponent p) {
    NormDescriptor d;
    d.kind = Kind::lp;
    d.p = p;
    return d;
  }
  static NormDescriptor make_schreier(Ordinal a) {
    NormDescriptor d;
    d.kind = Kind::schreier;
    d.alpha = std::move(a);
    return d;
  }
  static NormDescriptor make_baernstein(Ordinal a, Exponent p) {
    NormDescriptor d;
    d.kind = Kind::baernstein;
    d.alpha = std::move(a);
    d.p = p;
    return d;
  }

  std::string format() const {
    switch (kind) {
      case Kind::lp:
        return "lp:" + p.format();
      case Kind::schreier:
        return "schreier:" + alpha.format();
      case Kind::baernstein:
        return "baernstein:" + alpha.format() + ":" + p.format();
    }
    return "?";
  }

  // "lp:2" | "schreier:w*2" | "baernstein:w+1:3/2"
  static NormDescriptor parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("norm descriptor: expected kind:args in '" + s + "'");
    std::string kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    if (kind == "lp") return make_lp(Exponent::parse(rest));
    if (kind == "schreier") return make_schreier(Ordinal::parse(rest));
    if (kind == "baernstein") {
      auto last = rest.rfind(':');
      if (last == std::string::npos)
        throw std::invalid_argument("norm descriptor: baernstein needs alpha:p");
      return make_baernstein(Ordinal::parse(rest.substr(0, last)),
                             Exponent::parse(rest.substr(last + 1)));
    }
    throw std::invalid_argument("norm descriptor: unknown kind '" + kind + "'");
  }
};

struct NormResult {
  NormValue value;
  // optimizing witness: one member set for schreier_norm, the block
  // partition for baernstein/composite (lexicographically least maximizer;
  // in interval mode the partition maximizing the certified lower bound)
  std::vector<FiniteSet> witness;
};

// ---------------------------------------------------------------------------
// l_p aggregation over already-computed piece values

namespace detail {

inline bool lex_less(const std::vector<FiniteSet>& a, const std::vector<FiniteSet>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

inline RationalInterval value_pow_enclosure(const RationalInterval& x, const Exponent& p,
                                            unsigned bits) {
  // x^p endpoint-wise for nonnegative x, p = u/v
  unsigned long u = p.u(), v = p.v();
  Rational lo = nth_root_enclosure(pow_ui(x.lo, u), v, bits).lo;
  Rational hi = nth_root_enclosure(pow_ui(x.hi, u), v, bits).hi;
  if (lo < 0) lo = 0;
  return {lo, hi};
}

inline RationalInterval value_root_enclosure(const RationalInterval& x, const Exponent& p,
                                             unsigned bits) {
  // x^(1/p) = x^(v/u) endpoint-wise
  unsigned long u = p.u(), v = p.v();
  Rational lo = nth_root_enclosure(pow_ui(x.lo, v), u, bits).lo;
  Rational hi = nth_root_enclosure(pow_ui(x.hi, v), u, bits).hi;
  if (lo < 0) lo = 0;
  return {lo, hi};
}

}  // namespace detail

// (sum_j vals_j^p)^(1/p), with the exact fast paths: everything exact with
// integer p stays a p-th power; pieces already powered at the same integer p
// just add up (this is what makes the l_p-composition identity exact).
inline NormValue lp_aggregate(const Exponent& p, const std::vector<NormValue>& vals,
                              const Limits& lim = Limits{}) {
  if (vals.empty()) return NormValue::exact(Rational(0));

  if (p.is_infinite()) {
    bool comparable = true;
    std::size_t best = 0;
    for (std::size_t j = 1; j < vals.size() && comparable; ++j) {
      auto c = NormValue::exact_compare(vals[j], vals[best]);
      if (!c)
        comparable = false;
      else if (*c > 0)
        best = j;
    }
    if (comparable) return vals[best];
    for (unsigned bits = lim.root_scale_bits;; bits *= 2) {
      RationalInterval m = vals[0].enclosure(bits);
      for (std::size_t j = 1; j < vals.size(); ++j)
        m = RationalInterval::join_max(m, vals[j].enclosure(bits));
      if (m.width() <= lim.interval_tolerance || bits >= 8192)
        return NormValue::interval(m);
    }
  }

  if (p.is_one()) {
    bool all_exact = true;
    for (const auto& v : vals) all_exact = all_exact && v.is_exact();
    if (all_exact) {
      Rational s(0);
      for (const auto& v : vals) s += v.exact_value();
      return NormValue::exact(s);
    }
  } else if (p.is_integer()) {
    bool summable = true;
    for (const auto& v : vals) {
      summable = summable && (v.is_exact() ||
                              (v.mode() == NormValue::Mode::pth_power && v.power() == p));
    }
    if (summable) {
      Rational s(0);
      for (const auto& v : vals)
        s += v.is_exact() ? pow_ui(v.exact_value(), p.u()) : v.power_value();
      return NormValue::pth_power(std::move(s), p);
    }
  }

  // interval fallback, adaptive scale
  for (unsigned bits = lim.root_scale_bits;; bits *= 2) {
    RationalInterval sum;
    for (const auto& v : vals) {
      RationalInterval e = v.enclosure(bits);
      if (p.is_integer())
        sum += e.pow(p.u());
      else
        sum += detail::value_pow_enclosure(e, p, bits);
    }
    RationalInterval r = detail::value_root_enclosure(sum, p, bits);
    if (r.width() <= lim.interval_tolerance || bits >= 8192) return NormValue::interval(r);
  }
}

inline NormValue lp_norm(const Exponent& p, const RationalVector& x, const Limits& lim = Limits{}) {
  std::vector<NormValue> vals;
  vals.reserve(x.entries().size());
  for (const auto& [i, v] : x.entries()) vals.push_back(NormValue::exact(rational_abs(v)));
  return lp_aggregate(p, vals, lim);
}

// ---------------------------------------------------------------------------
// evaluator with a shared family cache

class NormEvaluator {
 public:
  explicit NormEvaluator(Limits lim = Limits{}) : lim_(lim) {}

  const Limits& limits() const { return lim_; }

  SchreierFamily& family(const Ordinal& a) {
    auto it = fams_.find(a);
    if (it != fams_.end()) return it->second;
    // all handles derive from the first so they share one membership cache
    SchreierFamily f = fams_.empty() ? SchreierFamily(a) : fams_.begin()->second.relative(a);
    return fams_.emplace(a, std::move(f)).first->second;
  }

  // sup_{E in S_alpha} sum_{i in E} |x_i|; witness = lex-least maximizing E
  NormResult schreier_norm(const Ordinal& alpha, const RationalVector& x) {
    check_support(x, lim_.support_ceiling);
    const SchreierFamily& fam = family(alpha);
    const auto& entries = x.entries();
    Rational best(0);
    std::vector<std::int64_t> best_set;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::size_t from, const FiniteSet& e, const Rational& mass) -> void {
      for (std::size_t idx = from; idx < entries.size(); ++idx) {
        FiniteSet ext = e.with_appended(entries[idx].first);
        if (!fam.contains(ext)) break;  // extension membership is value-independent
        Rational m = mass + rational_abs(entries[idx].second);
        if (m > best) {
          best = m;
          best_set = ext.elements();
        }
        self(self, idx + 1, ext, m);
      }
    };
    rec(rec, 0, FiniteSet{}, Rational(0));
    NormResult r;
    r.value = NormValue::exact(best);
    r.witness = {FiniteSet(best_set)};
    return r;
  }

  // sup over successive member blocks of the l_p aggregate of block masses
  NormResult baernstein_norm(const Ordinal& alpha, const Exponent& p, const RationalVector& x) {
    check_support(x, lim_.support_ceiling);
    if (x.is_zero()) return {NormValue::exact(Rational(0)), {}};
    if (p.is_infinite()) return schreier_norm(alpha, x);
    if (p.is_integer()) return baernstein_exact(alpha, p, x);
    return baernstein_interval(alpha, p, x);
  }

  NormResult evaluate(const NormDescriptor& d, const RationalVector& x) {
    switch (d.kind) {
      case NormDescriptor::Kind::lp:
        return {lp_norm(d.p, x, lim_), {}};
      case NormDescriptor::Kind::schreier:
        return schreier_norm(d.alpha, x);
      case NormDescriptor::Kind::baernstein:
        return baernstein_norm(d.alpha, d.p, x);
    }
    throw std::logic_error("norm: bad descriptor");
  }

  // sup over blockings of the support into consecutive runs. A cut between
  // adjacent support elements s_j < s_{j+1} stands for every integer cut in
  // (s_j, s_{j+1}]; each piece enters the outer norm at its support minimum
  // (right dominance makes that placement optimal, and the outer l_p does
  // not read positions at all). Witness = the optimizing run partition.
  NormResult composite_norm(const NormDescriptor& inner, const NormDescriptor& outer,
                            const RationalVector& x) {
    if (outer.kind == NormDescriptor::Kind::baernstein)
      throw std::invalid_argument("composite: outer norm must be lp or schreier");
    if (x.is_zero()) return {NormValue::exact(Rational(0)), {}};
    const FiniteSet supp = x.support();
    const std::size_t k = supp.size();
    if (static_cast<std::int64_t>(k) > lim_.composite_support_ceiling)
      throw budget_error("composite: support exceeds the blocking ceiling");

    // inner value of every contiguous run [i..j] of support positions
    std::vector<std::vector<NormValue>> run(k, std::vector<NormValue>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        run[i][j] = evaluate(inner, x.restricted_range(supp.at(i), supp.at(j))).value;

    std::optional<NormValue> best;
    std::vector<FiniteSet> best_parts;
    std::vector<NormValue> vals;
    std::vector<FiniteSet> parts;
    std::vector<std::int64_t> placements;
    const std::uint64_t patterns = k >= 1 ? (std::uint64_t(1) << (k - 1)) : 1;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      vals.clear();
      parts.clear();
      placements.clear();
      std::size_t start = 0;
      for (std::size_t t = 0; t < k; ++t) {
        bool cut_after = t + 1 == k || (mask >> t) & 1;
        if (cut_after) {
          vals.push_back(run[start][t]);
          parts.push_back(supp.slice(start, t + 1));
          placements.push_back(supp.at(start));
          start = t + 1;
        }
      }
      NormValue total = outer.kind == NormDescriptor::Kind::lp
                            ? lp_aggregate(outer.p, vals, lim_)
                            : outer_schreier(outer.alpha, placements, vals);
      if (!best) {
        best = total;
        best_parts = parts;
        continue;
      }
      int c = value_order(total, *best);
      if (c > 0 || (c == 0 && detail::lex_less(parts, best_parts))) {
        best = total;
        best_parts = parts;
      }
    }
    return {*best, best_parts};
  }

  // ---- domination falsifier ----

  enum class Direction { upper, lower };

  struct DominationQuery {
    std::vector<RationalVector> blocks;    // strictly successive supports
    NormDescriptor block_norm;
    std::vector<std::int64_t> positions;   // reference positions, increasing
    NormDescriptor reference_norm;
    Rational constant = Rational(1);
    Direction direction = Direction::upper;
  };

  struct DominationOutcome {
    bool falsified = false;
    std::vector<Rational> witness;     // first violating coefficients
    std::int64_t samples = 0;
    // max over samples of R^m where R = lhs/rhs (upper) or rhs/lhs (lower);
    // violation means R > constant. Absent when an interval mode blocked
    // exact tracking.
    std::optional<Rational> max_ratio_power;
    unsigned ratio_power = 1;
    std::vector<Rational> max_ratio_at;
    bool indeterminate = false;        // some comparison failed to certify
  };

  DominationOutcome check_domination(const DominationQuery& q, std::uint64_t seed) {
    const std::size_t n = q.blocks.size();
    if (n == 0) throw std::invalid_argument("domination: empty sequence");
    if (q.positions.size() != n)
      throw std::invalid_argument("domination: sequences of unequal length");
    if (q.constant <= 0) throw std::invalid_argument("domination: constant must be > 0");
    for (std::size_t i = 0; i < n; ++i) {
      if (q.blocks[i].is_zero()) throw std::invalid_argument("domination: zero block");
      if (i) {
        if (!(q.blocks[i - 1].support().max() < q.blocks[i].support().min()))
          throw std::invalid_argument("domination: blocks must be successive");
        if (q.positions[i - 1] >= q.positions[i])
          throw std::invalid_argument("domination: positions must be increasing");
      }
      if (q.positions[i] < 1) throw std::invalid_argument("domination: positions must be >= 1");
    }

    DominationOutcome out;
    for (const auto& a : coefficient_samples(n, lim_.coefficient_budget, seed)) {
      ++out.samples;
      RationalVector lhs, rhs;
      std::vector<RationalVector::Entry> ref;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        lhs += q.blocks[i].scaled(a[i]);
        ref.emplace_back(q.positions[i], a[i]);
      }
      rhs = RationalVector::from_entries(std::move(ref));
      NormValue lv = evaluate(q.block_norm, lhs).value;
      NormValue rv = evaluate(q.reference_norm, rhs).value;
      const NormValue& num = q.direction == Direction::upper ? lv : rv;
      const NormValue& den = q.direction == Direction::upper ? rv : lv;

      auto cmp = NormValue::compare(num, scale_norm(den, q.constant), lim_.root_scale_bits);
      if (!cmp) {
        out.indeterminate = true;
      } else if (*cmp > 0) {
        out.falsified = true;
        out.witness = a;
        return out;
      }
      track_ratio(out, num, den, a);
    }
    return out;
  }

  // deterministic nonnegative coefficient families: all {0,1} patterns when
  // len <= 12 (spikes and the flat vector otherwise), then `random_count`
  // seeded rational vectors
  static std::vector<std::vector<Rational>> coefficient_samples(std::size_t len,
                                                                std::int64_t random_count,
                                                                std::uint64_t seed) {
    std::vector<std::vector<Rational>> out;
    if (len <= 12) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << len); ++mask) {
        std::vector<Rational> a(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i)
          if ((mask >> i) & 1) a[i] = 1;
        out.push_back(std::move(a));
      }
    } else {
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<Rational> a(len, Rational(0));
        a[i] = 1;
        out.push_back(std::move(a));
      }
      out.emplace_back(len, Rational(1));
    }
    // raw engine words only: std distributions are not portable across
    // platforms, raw mt19937_64 output is
    std::mt19937_64 eng(seed);
    for (std::int64_t s = 0; s < random_count; ++s) {
      std::vector<Rational> a(len);
      bool nonzero = false;
      for (std::size_t i = 0; i < len; ++i) {
        unsigned long num = static_cast<unsigned long>(eng() % 9);
        unsigned long den = static_cast<unsigned long>(eng() % 8) + 1;
        a[i] = make_rational(static_cast<long long>(num), static_cast<long long>(den));
        nonzero = nonzero || num != 0;
      }
      if (!nonzero) a[0] = 1;
      out.push_back(std::move(a));
    }
    return out;
  }

 private:
  Limits lim_;
  std::map<Ordinal, SchreierFamily> fams_;

  static void check_support(const RationalVector& x, std::int64_t ceiling) {
    if (static_cast<std::int64_t>(x.support_size()) > ceiling)
      throw budget_error("norm: support exceeds the evaluation ceiling");
  }

  // deterministic order for picking maxima: exact compare when possible,
  // otherwise by certified lower bound
  int value_order(const NormValue& a, const NormValue& b) const {
    if (auto c = NormValue::exact_compare(a, b)) return *c;
    RationalInterval ia = a.enclosure(lim_.root_scale_bits);
    RationalInterval ib = b.enclosure(lim_.root_scale_bits);
    return ia.lo < ib.lo ? -1 : ib.lo < ia.lo ? 1 : 0;
  }

  // exact DP for integer p: dp[i] = best sum of block-mass^p over successive
  // member blocks inside positions[i..], block minima at support positions
  NormResult baernstein_exact(const Ordinal& alpha, const Exponent& p, const RationalVector& x) {
    const SchreierFamily& fam = family(alpha);
    const auto& entries = x.entries();
    const std::size_t k = entries.size();
    const unsigned long pu = p.u();

    struct Cell {
      Rational value;
      std::vector<FiniteSet> parts;
    };
    std::vector<Cell> dp(k + 1);
    dp[k] = {Rational(0), {}};
    for (std::size_t i = k; i-- > 0;) {
      // block candidates first (lex-least wins ties against skipping)
      Cell best;
      bool have = false;
      auto consider = [&](const FiniteSet& b, const Rational& mass, std::size_t next) {
        Rational cand = pow_ui(mass, pu) + dp[next].value;
        if (!have || cand > best.value) {
          have = true;
          best.value = std::move(cand);
          best.parts.clear();
          best.parts.push_back(b);
          best.parts.insert(best.parts.end(), dp[next].parts.begin(), dp[next].parts.end());
        }
      };
      auto rec = [&](auto&& self, const FiniteSet& b, const Rational& mass,
                     std::size_t last) -> void {
        consider(b, mass, last + 1);
        for (std::size_t j = last + 1; j < k; ++j) {
          FiniteSet ext = b.with_appended(entries[j].first);
          if (!fam.contains(ext)) break;
          self(self, ext, mass + rational_abs(entries[j].second), j);
        }
      };
      FiniteSet first({entries[i].first});
      if (fam.contains(first)) rec(rec, first, rational_abs(entries[i].second), i);
      if (!have || dp[i + 1].value > best.value) best = dp[i + 1];  // skip position i
      dp[i] = std::move(best);
    }
    return {NormValue::pth_power(dp[0].value, p), dp[0].parts};
  }

  // certified-enclosure DP for non-integer rational p; dp intervals join all
  // candidates (sound enclosure of the max), witness follows the best
  // certified lower bound
  NormResult baernstein_interval(const Ordinal& alpha, const Exponent& p,
                                 const RationalVector& x) {
    const SchreierFamily& fam = family(alpha);
    const auto& entries = x.entries();
    const std::size_t k = entries.size();

    for (unsigned bits = lim_.root_scale_bits;; bits *= 2) {
      struct Cell {
        RationalInterval value;
        std::vector<FiniteSet> parts;  // maximizer of the lower bound
        Rational parts_lo;
      };
      std::vector<Cell> dp(k + 1);
      dp[k] = {RationalInterval::point(Rational(0)), {}, Rational(0)};
      for (std::size_t i = k; i-- > 0;) {
        Cell cell = dp[i + 1];  // the skip candidate; blocks below win ties
        bool parts_from_skip = true;
        auto consider = [&](const FiniteSet& b, const Rational& mass, std::size_t next) {
          RationalInterval bp =
              nth_root_enclosure(pow_ui(mass, p.u()), p.v(), bits);  // mass^p
          RationalInterval cand = bp + dp[next].value;
          Rational cand_lo = cand.lo;
          cell.value = RationalInterval::join_max(cell.value, cand);
          if (cand_lo > cell.parts_lo || (cand_lo == cell.parts_lo && parts_from_skip)) {
            cell.parts.clear();
            cell.parts.push_back(b);
            cell.parts.insert(cell.parts.end(), dp[next].parts.begin(), dp[next].parts.end());
            cell.parts_lo = cand_lo;
            parts_from_skip = false;
          }
        };
        auto rec = [&](auto&& self, const FiniteSet& b, const Rational& mass,
                       std::size_t last) -> void {
          consider(b, mass, last + 1);
          for (std::size_t j = last + 1; j < k; ++j) {
            FiniteSet ext = b.with_appended(entries[j].first);
            if (!fam.contains(ext)) break;
            self(self, ext, mass + rational_abs(entries[j].second), j);
          }
        };
        FiniteSet first({entries[i].first});
        if (fam.contains(first)) rec(rec, first, rational_abs(entries[i].second), i);
        dp[i] = std::move(cell);
      }
      RationalInterval norm = detail::value_root_enclosure(dp[0].value, p, bits);
      if (norm.width() <= lim_.interval_tolerance || bits >= 8192)
        return {NormValue::interval(norm), dp[0].parts};
    }
  }

  // outer Schreier norm of exact piece values placed at the given positions;
  // non-exact pieces drop to a certified enclosure over the same members
  NormValue outer_schreier(const Ordinal& alpha, const std::vector<std::int64_t>& positions,
                           const std::vector<NormValue>& vals) {
    bool all_exact = true;
    for (const auto& v : vals) all_exact = all_exact && v.is_exact();
    if (all_exact) {
      std::vector<RationalVector::Entry> es;
      for (std::size_t j = 0; j < vals.size(); ++j)
        es.emplace_back(positions[j], vals[j].exact_value());
      return schreier_norm(alpha, RationalVector::from_entries(std::move(es))).value;
    }
    const SchreierFamily& fam = family(alpha);
    unsigned bits = lim_.root_scale_bits;
    std::vector<RationalInterval> enc;
    enc.reserve(vals.size());
    for (const auto& v : vals) enc.push_back(v.enclosure(bits));
    RationalInterval best = RationalInterval::point(Rational(0));
    auto rec = [&](auto&& self, std::size_t from, const FiniteSet& e,
                   const RationalInterval& mass) -> void {
      for (std::size_t idx = from; idx < positions.size(); ++idx) {
        FiniteSet ext = e.with_appended(positions[idx]);
        if (!fam.contains(ext)) break;
        RationalInterval m = mass + enc[idx];
        best = RationalInterval::join_max(best, m);
        self(self, idx + 1, ext, m);
      }
    };
    rec(rec, 0, FiniteSet{}, RationalInterval::point(Rational(0)));
    return NormValue::interval(best);
  }

  void track_ratio(DominationOutcome& out, const NormValue& num, const NormValue& den,
                   const std::vector<Rational>& a) {
    if (out.indeterminate) return;
    auto powered = [](const NormValue& v) -> std::optional<std::pair<Rational, Exponent>> {
      if (v.is_exact()) return std::make_pair(v.exact_value(), Exponent::integer(1));
      if (v.mode() == NormValue::Mode::pth_power)
        return std::make_pair(v.power_value(), v.power());
      return std::nullopt;
    };
    auto pn = powered(num), pd = powered(den);
    if (!pn || !pd) return;  // interval mode: no exact ratio bookkeeping
    // num = A^(v1/u1), den = B^(v2/u2); R^m rational for m = lcm(u1,u2)
    unsigned long u1 = pn->second.u(), v1 = pn->second.v();
    unsigned long u2 = pd->second.u(), v2 = pd->second.v();
    unsigned long m = std::lcm(u1, u2);
    if (m > 64) return;
    if (pd->first == 0) return;  // zero reference never sampled with a != 0
    Rational r = pow_ui(pn->first, m / u1 * v1) / pow_ui(pd->first, m / u2 * v2);
    if (!out.max_ratio_power) {
      out.max_ratio_power = std::move(r);
      out.ratio_power = static_cast<unsigned>(m);
      out.max_ratio_at = a;
      return;
    }
    if (static_cast<unsigned>(m) != out.ratio_power) return;  // fixed per query
    if (r > *out.max_ratio_power) {
      out.max_ratio_power = std::move(r);
      out.max_ratio_at = a;
    }
  }
};

}  // namespace baernstein
