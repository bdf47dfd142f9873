#pragma once

// The eleven desk-scale checks behind `verify all`, one CheckReport each.
// Every window, truncation and sample count is pinned here so the canonical
// report sections are byte-stable for a fixed config. Checks 1-10 are the
// substance; check 11 reruns the lot and compares canonical dumps.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "baernstein/averages.hpp"
#include "baernstein/config.hpp"
#include "baernstein/norms.hpp"
#include "baernstein/oracles.hpp"
#include "baernstein/report.hpp"
#include "baernstein/szlenk.hpp"

namespace baernstein::acceptance {

// shared windows
inline constexpr std::int64_t kSubsetWindow = 12;   // checks 1, 2 and the spread bound of 6
inline constexpr std::int64_t kMassTruncationLow = 27;   // check 3, first-level family
inline constexpr std::int64_t kMassTruncationHigh = 18;  // check 3, deeper families
inline constexpr std::int64_t kPrefixCap = 4;            // checks 3, 8: most vectors attempted
// check 7
inline constexpr std::int64_t kBlockSequences = 10000;
inline constexpr std::int64_t kBlockValueCeiling = 15;
inline constexpr std::int64_t kBlockCoefficientBudget = 4;
inline const Rational kBlockConstant = Rational(4);
// check 8
inline const Rational kEquivalenceConstant = Rational(5);
inline constexpr std::int64_t kEquivalenceCoefficientBudget = 24;
// check 9
inline constexpr std::int64_t kTreeTruncation = 6;
inline constexpr std::int64_t kTreeCoefficientBudget = 25;
// check 10: frozen boundary of i^(1/2) * 1/16 > 5, i.e. i > 6400
inline const BigInt kFrozenThreshold = BigInt(6401);

inline std::vector<Ordinal> audit_ordinals() {
  return {Ordinal::natural(1),           Ordinal::natural(2),
          Ordinal::natural(3),           Ordinal::omega(),
          Ordinal::omega().successor(),  Ordinal::omega_power(Ordinal::natural(1), 2)};
}

inline const std::vector<Rational>& entry_pool() {
  static const std::vector<Rational> pool = {Rational(1),          Rational(-1),
                                             make_rational(1, 2),  make_rational(-1, 2),
                                             make_rational(1, 3),  make_rational(-1, 3)};
  return pool;
}

// Norm-check corpus: every vector supported inside {1..5} with entries from
// the pool (7^5 - 1 = 16806 of them), plus 40 seeded vectors per support
// size 6..10 inside {1..12}.
struct Corpus {
  std::vector<RationalVector> vectors;
  std::int64_t exhaustive = 0;
  std::int64_t sampled = 0;
};

inline Corpus build_corpus(std::uint64_t seed) {
  Corpus c;
  const auto& pool = entry_pool();
  for (std::uint64_t mask = 1; mask < 32; ++mask) {
    std::vector<std::int64_t> supp;
    for (std::int64_t i = 0; i < 5; ++i)
      if ((mask >> i) & 1) supp.push_back(i + 1);
    std::vector<std::size_t> digit(supp.size(), 0);
    while (true) {
      std::vector<RationalVector::Entry> es;
      for (std::size_t i = 0; i < supp.size(); ++i) es.emplace_back(supp[i], pool[digit[i]]);
      c.vectors.push_back(RationalVector::from_entries(std::move(es)));
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == pool.size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  c.exhaustive = static_cast<std::int64_t>(c.vectors.size());
  std::mt19937_64 eng(seed ^ 0x6f35c5a2b8e41d97ull);
  for (std::int64_t size = 6; size <= 10; ++size) {
    for (int rep = 0; rep < 40; ++rep) {
      std::set<std::int64_t> supp;
      while (static_cast<std::int64_t>(supp.size()) < size)
        supp.insert(1 + static_cast<std::int64_t>(eng() % 12));
      std::vector<RationalVector::Entry> es;
      for (std::int64_t pos : supp) es.emplace_back(pos, pool[eng() % pool.size()]);
      c.vectors.push_back(RationalVector::from_entries(std::move(es)));
    }
  }
  c.sampled = static_cast<std::int64_t>(c.vectors.size()) - c.exhaustive;
  return c;
}

// largest prefix of repeated averages the entry budget admits, up to cap
inline std::optional<AveragePrefix> feasible_prefix(const Ordinal& alpha, std::int64_t i1,
                                                    std::int64_t cap, const Limits& lim) {
  std::optional<AveragePrefix> best;
  for (std::int64_t n = 1; n <= cap; ++n) {
    try {
      best = generate_averages(alpha, IndexStream::geometric({i1}, 3, true), n, lim);
    } catch (const budget_error&) {
      break;
    }
  }
  return best;
}

class Harness {
 public:
  static constexpr int kChecks = 11;

  explicit Harness(Config cfg) : cfg_(std::move(cfg)) {}

  CheckReport run(int check) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    switch (check) {
      case 1: r = c1(); break;
      case 2: r = c2(); break;
      case 3: r = c3(); break;
      case 4: r = c4(); break;
      case 5: r = c5(); break;
      case 6: r = c6(); break;
      case 7: r = c7(); break;
      case 8: r = c8(); break;
      case 9: r = c9(); break;
      case 10: r = c10(); break;
      case 11: r = c11(); break;
      default: throw std::invalid_argument("acceptance: check number out of range");
    }
    r.config = cfg_.to_json();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
  }

  // checks 1..10 in order, then the determinism comparison
  std::vector<CheckReport> run_all() {
    std::vector<CheckReport> out;
    for (int k = 1; k <= 10; ++k) out.push_back(run(k));
    auto t0 = std::chrono::steady_clock::now();
    std::string first = canonical_dump(out);
    Harness again(cfg_);
    std::vector<CheckReport> redo;
    for (int k = 1; k <= 10; ++k) redo.push_back(again.run(k));
    std::string second = canonical_dump(redo);
    CheckReport r = determinism_report(first, second);
    r.config = cfg_.to_json();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    out.push_back(std::move(r));
    return out;
  }

 private:
  Config cfg_;
  std::optional<Corpus> corpus_;

  const Corpus& corpus() {
    if (!corpus_) corpus_ = build_corpus(cfg_.seed);
    return *corpus_;
  }

  static nlohmann::json ordinal_list() {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& o : audit_ordinals()) a.push_back(o.format());
    return a;
  }

  // 1: greedy membership == exhaustive-decomposition membership
  CheckReport c1() {
    CheckReport r;
    r.check = "membership.oracle-equivalence";
    r.parameters = {{"window", kSubsetWindow}, {"alphas", ordinal_list()}};
    SchreierFamily base(Ordinal::natural(1));
    oracle::MembershipOracle orc;
    std::int64_t checks = 0, mismatches = 0;
    for (const Ordinal& a : audit_ordinals()) {
      SchreierFamily fam = base.relative(a);
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << kSubsetWindow); ++mask) {
        std::vector<std::int64_t> el;
        for (std::int64_t i = 0; i < kSubsetWindow; ++i)
          if ((mask >> i) & 1) el.push_back(i + 1);
        FiniteSet e(std::move(el));
        bool greedy = fam.contains(e);
        bool brute = orc.member(a, e);
        ++checks;
        if (greedy != brute) {
          ++mismatches;
          if (r.witnesses.size() < 8)
            r.witnesses.push_back({{"alpha", a.format()},
                                   {"set", e.format()},
                                   {"greedy", greedy},
                                   {"oracle", brute}});
        }
      }
    }
    r.observe("subset checks", checks);
    r.observe("mismatches", mismatches);
    r.set_status(mismatches == 0);
    return r;
  }

  // 2: hereditary + spreading (exhaustive) and successor containment
  CheckReport c2() {
    CheckReport r;
    r.check = "family.structure-audit";
    r.parameters = {{"window", kSubsetWindow}, {"alphas", ordinal_list()}};
    SchreierFamily base(Ordinal::natural(1));
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const Ordinal& a : audit_ordinals()) {
      AuditResult res = base.relative(a).audit(kSubsetWindow, cfg_.limits);
      ok = ok && res.pass() && res.exhaustive_subsets;
      rows.push_back({{"alpha", a.format()},
                      {"members", res.member_count},
                      {"hereditary checks", res.hereditary_checks},
                      {"spreading checks", res.spreading_checks},
                      {"hereditary", res.hereditary_ok},
                      {"spreading", res.spreading_ok},
                      {"successor", res.successor_ok}});
      if (!res.pass() && r.witnesses.size() < 8) {
        for (const auto& [m, f] : res.hereditary_failures)
          r.witnesses.push_back({{"alpha", a.format()}, {"member", m.format()},
                                 {"missing subset", f.format()}});
        for (const auto& [m, g] : res.spreading_failures)
          r.witnesses.push_back({{"alpha", a.format()}, {"member", m.format()},
                                 {"missing spread", g.format()}});
      }
    }
    r.observe("families", rows);
    r.set_status(ok);
    return r;
  }

  // 3: l1 mass of summed averages over any enumerated member stays <= 2
  CheckReport c3() {
    CheckReport r;
    r.check = "averages.l1-bound";
    r.parameters = {{"prefix cap", kPrefixCap},
                    {"truncation low", kMassTruncationLow},
                    {"truncation high", kMassTruncationHigh}};
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    const std::vector<Ordinal> alphas = {Ordinal::natural(1), Ordinal::natural(2),
                                         Ordinal::omega()};
    for (const Ordinal& a : alphas) {
      for (std::int64_t i1 = 1; i1 <= 2; ++i1) {
        auto pre = feasible_prefix(a, i1, kPrefixCap, cfg_.limits);
        if (!pre) {
          rows.push_back({{"alpha", a.format()}, {"i1", i1}, {"n_sum", 0},
                          {"note", "entry budget admits no prefix"}});
          continue;
        }
        std::int64_t trunc = a == Ordinal::natural(1) ? kMassTruncationLow : kMassTruncationHigh;
        Limits lim = cfg_.limits;
        lim.enumeration_ceiling = std::max(lim.enumeration_ceiling, trunc);
        L1BoundOutcome out =
            lemma31_check(*pre, static_cast<std::int64_t>(pre->vectors.size()), trunc, lim);
        ok = ok && out.pass;
        rows.push_back({{"alpha", a.format()},
                        {"i1", i1},
                        {"n_sum", out.n_sum},
                        {"truncation", out.truncation},
                        {"members", out.members_checked},
                        {"max mass", to_string(out.max_mass)},
                        {"witness", out.witness.format()}});
        if (!out.pass && r.witnesses.size() < 8)
          r.witnesses.push_back({{"alpha", a.format()}, {"i1", i1},
                                 {"member", out.witness.format()},
                                 {"mass", to_string(out.max_mass)}});
      }
    }
    r.observe("cases", rows);
    r.set_status(ok);
    return r;
  }

  // 4: block DP == partition-enumeration oracle == blocking formula
  CheckReport c4() {
    CheckReport r;
    r.check = "norm.dp-vs-oracle";
    const Corpus& c = corpus();
    r.parameters = {{"corpus exhaustive", c.exhaustive}, {"corpus sampled", c.sampled}};
    NormEvaluator ev(cfg_.limits);
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int ai = 1; ai <= 2; ++ai) {
      Ordinal a = Ordinal::natural(ai);
      SchreierFamily& fam = ev.family(a);
      oracle::MemberFn fn = [&fam](const FiniteSet& e) { return fam.contains(e); };
      for (int pi = 1; pi <= 2; ++pi) {
        Exponent p = Exponent::integer(pi);
        NormDescriptor dp_desc = NormDescriptor::make_baernstein(a, p);
        std::int64_t oracle_bad = 0, blocking_bad = 0;
        for (const RationalVector& x : c.vectors) {
          NormValue dp = ev.evaluate(dp_desc, x).value;
          NormValue brute = oracle::baernstein_norm(fn, p, x);
          auto eq = NormValue::exact_compare(dp, brute);
          if (!eq || *eq != 0) {
            ++oracle_bad;
            if (r.witnesses.size() < 8)
              r.witnesses.push_back({{"alpha", a.format()}, {"p", p.format()},
                                     {"vector", x.format()}, {"against", "oracle"}});
          }
          NormValue blocked =
              ev.composite_norm(NormDescriptor::make_schreier(a), NormDescriptor::make_lp(p), x)
                  .value;
          auto eq2 = NormValue::exact_compare(dp, blocked);
          if (!eq2 || *eq2 != 0) {
            ++blocking_bad;
            if (r.witnesses.size() < 8)
              r.witnesses.push_back({{"alpha", a.format()}, {"p", p.format()},
                                     {"vector", x.format()}, {"against", "blocking"}});
          }
        }
        ok = ok && oracle_bad == 0 && blocking_bad == 0;
        rows.push_back({{"alpha", a.format()},
                        {"p", p.format()},
                        {"vectors", static_cast<std::int64_t>(c.vectors.size())},
                        {"oracle mismatches", oracle_bad},
                        {"blocking mismatches", blocking_bad}});
      }
    }
    r.observe("combinations", rows);
    r.set_status(ok);
    return r;
  }

  // 5: blocking a p-aggregated norm with l_p changes nothing (p = 2)
  CheckReport c5() {
    CheckReport r;
    r.check = "norm.lp-idempotence";
    const Corpus& c = corpus();
    r.parameters = {{"p", "2"},
                    {"corpus exhaustive", c.exhaustive},
                    {"corpus sampled", c.sampled}};
    NormEvaluator ev(cfg_.limits);
    Exponent two = Exponent::integer(2);
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int ai = 1; ai <= 2; ++ai) {
      Ordinal a = Ordinal::natural(ai);
      NormDescriptor inner = NormDescriptor::make_baernstein(a, two);
      std::int64_t bad = 0;
      for (const RationalVector& x : c.vectors) {
        NormValue direct = ev.evaluate(inner, x).value;
        NormValue blocked = ev.composite_norm(inner, NormDescriptor::make_lp(two), x).value;
        auto eq = NormValue::exact_compare(direct, blocked);
        if (!eq || *eq != 0) {
          ++bad;
          if (r.witnesses.size() < 8)
            r.witnesses.push_back({{"alpha", a.format()}, {"vector", x.format()}});
        }
      }
      ok = ok && bad == 0;
      rows.push_back({{"alpha", a.format()},
                      {"vectors", static_cast<std::int64_t>(c.vectors.size())},
                      {"mismatches", bad}});
    }
    r.observe("combinations", rows);
    r.set_status(ok);
    return r;
  }

  // 6: replanting a vector on any spread of its support never shrinks the
  // norm (signs do not matter, so duplicate magnitude patterns are skipped)
  CheckReport c6() {
    CheckReport r;
    r.check = "norm.right-dominance";
    const Corpus& c = corpus();
    r.parameters = {{"spread bound", kSubsetWindow}};
    std::map<std::string, RationalVector> dedup;
    for (const RationalVector& x : c.vectors) {
      std::vector<RationalVector::Entry> abs_entries;
      for (const auto& [pos, val] : x.entries()) abs_entries.emplace_back(pos, rational_abs(val));
      RationalVector ax = RationalVector::from_entries(std::move(abs_entries));
      dedup.emplace(ax.format(), std::move(ax));
    }
    NormEvaluator ev(cfg_.limits);
    bool ok = true;
    std::int64_t pairs = 0, violations = 0;
    for (int ai = 1; ai <= 2; ++ai) {
      for (int pi = 1; pi <= 2; ++pi) {
        NormDescriptor d =
            NormDescriptor::make_baernstein(Ordinal::natural(ai), Exponent::integer(pi));
        for (const auto& [key, x] : dedup) {
          NormValue base = ev.evaluate(d, x).value;
          for_each_spread(x.support(), kSubsetWindow, [&](const FiniteSet& g) {
            ++pairs;
            NormValue moved = ev.evaluate(d, x.replanted(g)).value;
            auto cmp = NormValue::exact_compare(moved, base);
            if (!cmp || *cmp < 0) {
              ++violations;
              if (r.witnesses.size() < 8)
                r.witnesses.push_back({{"norm", d.format()}, {"vector", x.format()},
                                       {"spread", g.format()}});
            }
          });
        }
      }
    }
    ok = violations == 0;
    r.observe("magnitude patterns", static_cast<std::int64_t>(dedup.size()));
    r.observe("vector/spread pairs", pairs);
    r.observe("violations", violations);
    r.set_status(ok);
    return r;
  }

  // 7: no normalized block sequence beats the constant-4 upper estimate
  // against the basis at the support minima
  CheckReport c7() {
    CheckReport r;
    r.check = "norm.upper-block-estimates";
    r.parameters = {{"sequences per alpha", kBlockSequences},
                    {"value ceiling", kBlockValueCeiling},
                    {"constant", to_string(kBlockConstant)},
                    {"coefficient budget", kBlockCoefficientBudget},
                    {"p", "2"}};
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int ai = 1; ai <= 2; ++ai) {
      Ordinal a = Ordinal::natural(ai);
      Limits lim = cfg_.limits;
      lim.coefficient_budget = kBlockCoefficientBudget;
      NormEvaluator ev(lim);
      SchreierFamily& fam = ev.family(a);
      NormDescriptor d = NormDescriptor::make_baernstein(a, Exponent::integer(2));
      std::mt19937_64 eng(cfg_.seed ^ (0xb10c0000u + static_cast<unsigned>(ai)));
      std::int64_t sequences = 0, samples = 0, falsified = 0, indeterminate = 0;
      std::optional<Rational> max_ratio2;
      for (std::int64_t s = 0; s < kBlockSequences; ++s) {
        std::int64_t want = 1 + static_cast<std::int64_t>(eng() % 5);
        std::vector<RationalVector> blocks;
        std::vector<std::int64_t> positions;
        std::int64_t pos = 0;
        for (std::int64_t n = 0; n < want && pos < kBlockValueCeiling; ++n) {
          std::int64_t avail = kBlockValueCeiling - pos;
          std::int64_t size = std::min<std::int64_t>(1 + static_cast<std::int64_t>(eng() % 3),
                                                     avail);
          std::set<std::int64_t> chosen;
          for (int attempt = 0;; ++attempt) {
            chosen.clear();
            while (static_cast<std::int64_t>(chosen.size()) < size)
              chosen.insert(pos + 1 + static_cast<std::int64_t>(eng() % avail));
            if (fam.contains(FiniteSet(std::vector<std::int64_t>(chosen.begin(), chosen.end()))))
              break;
            if (attempt == 100) {  // singletons always belong
              chosen = {pos + 1};
              break;
            }
          }
          std::vector<RationalVector::Entry> es;
          for (std::int64_t v : chosen)
            es.emplace_back(v, make_rational(1 + static_cast<long>(eng() % 8),
                                             1 + static_cast<long>(eng() % 8)));
          RationalVector z = RationalVector::from_entries(std::move(es));
          // member support: the l1 mass IS the norm, so this normalizes exactly
          z = z.scaled(Rational(1) / z.l1_mass());
          positions.push_back(z.support().min());
          blocks.push_back(std::move(z));
          pos = *chosen.rbegin();
        }
        NormEvaluator::DominationQuery q;
        q.blocks = std::move(blocks);
        q.block_norm = d;
        q.positions = std::move(positions);
        q.reference_norm = d;
        q.constant = kBlockConstant;
        q.direction = NormEvaluator::Direction::upper;
        auto out = ev.check_domination(q, cfg_.seed + static_cast<std::uint64_t>(2 * s + ai));
        ++sequences;
        samples += out.samples;
        if (out.falsified || out.indeterminate) {
          ok = false;
          out.falsified ? ++falsified : ++indeterminate;
          if (r.witnesses.size() < 8)
            r.witnesses.push_back({{"alpha", a.format()},
                                   {"sequence", s},
                                   {"coefficients", coefficients_json(out.witness)},
                                   {"kind", out.falsified ? "falsified" : "indeterminate"}});
        }
        if (out.max_ratio_power && (!max_ratio2 || *out.max_ratio_power > *max_ratio2))
          max_ratio2 = *out.max_ratio_power;
      }
      rows.push_back({{"alpha", a.format()},
                      {"sequences", sequences},
                      {"coefficient samples", samples},
                      {"falsified", falsified},
                      {"indeterminate", indeterminate},
                      {"max squared ratio", max_ratio2 ? to_string(*max_ratio2) : "none"}});
    }
    r.observe("cases", rows);
    r.set_status(ok);
    return r;
  }

  // 8: averages prefixes are 5-equivalent to the l_2 unit basis
  CheckReport c8() {
    CheckReport r;
    r.check = "averages.basis-equivalence";
    r.parameters = {{"prefix cap", kPrefixCap},
                    {"constant", to_string(kEquivalenceConstant)},
                    {"coefficient budget", kEquivalenceCoefficientBudget},
                    {"p", "2"}};
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    Exponent two = Exponent::integer(2);
    Rational c2 = kEquivalenceConstant * kEquivalenceConstant;
    for (int ai = 1; ai <= 2; ++ai) {
      Ordinal a = Ordinal::natural(ai);
      for (std::int64_t i1 = 1; i1 <= 2; ++i1) {
        auto pre = feasible_prefix(a, i1, kPrefixCap, cfg_.limits);
        if (!pre) {
          ok = false;  // at least one vector must fit
          rows.push_back({{"alpha", a.format()}, {"i1", i1}, {"k", 0}});
          continue;
        }
        const std::size_t k = pre->vectors.size();
        NormEvaluator ev(cfg_.limits);
        NormDescriptor d = NormDescriptor::make_baernstein(a, two);
        auto samples = NormEvaluator::coefficient_samples(
            k, k == 1 ? 3 : kEquivalenceCoefficientBudget,
            cfg_.seed ^ (0xe8000000u + static_cast<unsigned>(16 * ai + i1)));
        std::int64_t used = 0, violations = 0;
        std::optional<Rational> lo_ratio2, hi_ratio2;
        for (const auto& coeffs : samples) {
          Rational sum2(0);
          RationalVector acc;
          for (std::size_t n = 0; n < k; ++n) {
            if (coeffs[n] == 0) continue;
            sum2 += coeffs[n] * coeffs[n];
            acc += pre->vectors[n].scaled(coeffs[n]);
          }
          if (sum2 == 0) continue;
          ++used;
          NormValue lv = ev.evaluate(d, acc).value;
          auto low = NormValue::exact_compare(NormValue::pth_power(sum2, two), lv);
          auto high = NormValue::exact_compare(lv, NormValue::pth_power(c2 * sum2, two));
          bool good = low && *low <= 0 && high && *high <= 0;
          if (!good) {
            ++violations;
            if (r.witnesses.size() < 8)
              r.witnesses.push_back({{"alpha", a.format()}, {"i1", i1},
                                     {"coefficients", coefficients_json(coeffs)}});
          }
          Rational lv2 = lv.is_exact() ? Rational(lv.exact_value() * lv.exact_value())
                                       : lv.power_value();
          Rational ratio2 = lv2 / sum2;
          if (!lo_ratio2 || ratio2 < *lo_ratio2) lo_ratio2 = ratio2;
          if (!hi_ratio2 || ratio2 > *hi_ratio2) hi_ratio2 = ratio2;
        }
        ok = ok && violations == 0;
        rows.push_back({{"alpha", a.format()},
                        {"i1", i1},
                        {"k", static_cast<std::int64_t>(k)},
                        {"samples", used},
                        {"violations", violations},
                        {"min squared ratio", lo_ratio2 ? to_string(*lo_ratio2) : "none"},
                        {"max squared ratio", hi_ratio2 ? to_string(*hi_ratio2) : "none"}});
      }
    }
    r.observe("cases", rows);
    r.set_status(ok);
    return r;
  }

  // 9: on every branch of the canonical tree the weighted basis sum has norm
  // exactly the coefficient sum (rho = 1)
  CheckReport c9() {
    CheckReport r;
    r.check = "szlenk.branch-identity";
    r.parameters = {{"truncation", kTreeTruncation},
                    {"rho", "1"},
                    {"coefficient budget", kTreeCoefficientBudget},
                    {"p", "2"}};
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int ai = 1; ai <= 2; ++ai) {
      Ordinal a = Ordinal::natural(ai);
      Limits lim = cfg_.limits;
      lim.coefficient_budget = kTreeCoefficientBudget;
      NormEvaluator ev(lim);
      TreeCertificate cert(a, Rational(1), kTreeTruncation);
      BranchCheckOutcome out = verify_branch_lower(
          ev, cert, NormDescriptor::make_baernstein(a, Exponent::integer(2)),
          cfg_.seed ^ (0x52000000u + static_cast<unsigned>(ai)));
      ok = ok && out.pass;
      rows.push_back({{"alpha", a.format()},
                      {"branches", out.branches},
                      {"samples", out.samples},
                      {"equalities", out.equalities}});
      if (!out.pass && r.witnesses.size() < 8)
        r.witnesses.push_back(
            {{"alpha", a.format()},
             {"base", out.failed_base ? out.failed_base->format() : "?"},
             {"kind", out.failure_kind},
             {"coefficients", coefficients_json(out.failed_coeffs)}});
    }
    r.observe("cases", rows);
    r.set_status(ok);
    return r;
  }

  // 10: the slicing threshold at rho = 1, p = 2 lands exactly past 6400,
  // and the explicit witness set has mass i1 with norm within 5 * i1^(1/2)
  CheckReport c10() {
    CheckReport r;
    r.check = "szlenk.threshold-witness";
    r.parameters = {{"rho", "1"}, {"p", "2"}, {"i1", 2}};
    Exponent two = Exponent::integer(2);
    BigInt t = threshold_index(Rational(1), two);
    bool at = t == kFrozenThreshold;
    bool below = !threshold_holds(kFrozenThreshold - 1, Rational(1), two);
    bool above = threshold_holds(kFrozenThreshold, Rational(1), two);
    NormEvaluator ev(cfg_.limits);
    WitnessOutcome w = prop42_witness(ev, Ordinal::natural(1), two, 2);
    r.observe("threshold", to_string(Rational(t)));
    r.observe("boundary fails below", below);
    r.observe("boundary holds at", above);
    r.observe("witness base size", static_cast<std::int64_t>(w.base.size()));
    r.observe("witness stream draws", w.consumed);
    r.observe("witness mass", to_string(w.mass));
    r.observe("witness norm", norm_value_json(w.norm));
    r.observe("witness bound", norm_value_json(w.bound));
    if (!w.pass())
      r.witnesses.push_back({{"base", w.base.format()},
                             {"mass ok", w.mass_ok},
                             {"support ok", w.support_ok},
                             {"norm ok", w.norm_ok}});
    r.set_status(at && below && above && w.pass());
    return r;
  }

  // 11: two full runs produce byte-identical canonical sections
  CheckReport c11() {
    Harness one(cfg_), two(cfg_);
    std::vector<CheckReport> a, b;
    for (int k = 1; k <= 10; ++k) a.push_back(one.run(k));
    for (int k = 1; k <= 10; ++k) b.push_back(two.run(k));
    return determinism_report(canonical_dump(a), canonical_dump(b));
  }

  static CheckReport determinism_report(const std::string& first, const std::string& second) {
    CheckReport r;
    r.check = "verify.determinism";
    r.parameters = {{"reruns", 2}};
    r.observe("first bytes", static_cast<std::int64_t>(first.size()));
    r.observe("second bytes", static_cast<std::int64_t>(second.size()));
    r.observe("identical", first == second);
    r.set_status(first == second);
    return r;
  }
};

}  // namespace baernstein::acceptance
