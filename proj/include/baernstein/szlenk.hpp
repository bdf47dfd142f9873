#pragma once

// Finite certificates behind the Szlenk-index lower bound: the canonical
// tree over the family (node E carries e_{max E}), whose branches are the
// initial-segment chains of members; the branch lower-bound check
// ||sum a_i x_{E_i}|| >= rho * sum a_i (with exact equality at rho = 1,
// since the branch's member set is itself an admissible block); and the
// arithmetic of the index threshold 5*i^(1/p) < (rho/16)*i together with
// the mass/norm witness construction over a triple-growth stream.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baernstein/averages.hpp"
#include "baernstein/errors.hpp"
#include "baernstein/exponent.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/limits.hpp"
#include "baernstein/norm_value.hpp"
#include "baernstein/norms.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/schreier.hpp"
#include "baernstein/vector.hpp"

namespace baernstein {

struct TreeCertificate {
  Ordinal alpha;
  Rational rho = Rational(1);   // in (0, 1]
  std::int64_t truncation = 6;
  // assignment rule: node E carries e_{max E} (the one built-in rule)

  TreeCertificate(Ordinal a, Rational r, std::int64_t n)
      : alpha(std::move(a)), rho(std::move(r)), truncation(n) {
    if (rho <= 0 || rho > 1) throw std::invalid_argument("certificate: rho must be in (0,1]");
    if (truncation < 1) throw std::invalid_argument("certificate: truncation must be >= 1");
  }
};

struct Branch {
  FiniteSet base;                 // the end-maximal member within truncation
  std::vector<FiniteSet> chain;   // its nonempty initial segments, in order
};

// All maximal initial-segment chains of nonempty members inside {1..N}.
// A member tops a maximal chain exactly when no element <= N extends it.
inline std::vector<Branch> enumerate_branches(const SchreierFamily& fam,
                                              const TreeCertificate& cert,
                                              const Limits& lim = Limits{}) {
  std::vector<Branch> out;
  fam.for_each_member(
      cert.truncation,
      [&](const FiniteSet& e) {
        if (e.empty()) return;
        for (std::int64_t m = e.max() + 1; m <= cert.truncation; ++m)
          if (fam.contains(e.with_appended(m))) return;  // extendable: not a branch top
        Branch b;
        b.base = e;
        for (std::size_t k = 1; k <= e.size(); ++k) b.chain.push_back(e.prefix(k));
        out.push_back(std::move(b));
      },
      lim);
  return out;
}

struct BranchCheckOutcome {
  bool pass = false;
  std::int64_t branches = 0;
  std::int64_t samples = 0;
  std::int64_t equalities = 0;  // exact equalities confirmed (rho = 1)
  // first failure, if any
  std::optional<FiniteSet> failed_base;
  std::vector<Rational> failed_coeffs;
  std::string failure_kind;  // "lower-bound" | "equality"
};

// For every branch E_1 < E_2 < ... and sampled a >= 0 checks
// ||sum a_i e_{max E_i}|| >= rho * sum a_i; at rho = 1 the inequality is an
// exact equality (the branch maxima form the member set E itself).
inline BranchCheckOutcome verify_branch_lower(NormEvaluator& ev, const TreeCertificate& cert,
                                              const NormDescriptor& norm, std::uint64_t seed) {
  const Limits& lim = ev.limits();
  SchreierFamily& fam = ev.family(cert.alpha);
  BranchCheckOutcome out;
  for (const Branch& b : enumerate_branches(fam, cert, lim)) {
    ++out.branches;
    auto samples = NormEvaluator::coefficient_samples(b.chain.size(), lim.coefficient_budget, seed);
    for (const auto& a : samples) {
      ++out.samples;
      std::vector<RationalVector::Entry> es;
      Rational total(0);
      for (std::size_t i = 0; i < b.chain.size(); ++i) {
        if (a[i] == 0) continue;
        es.emplace_back(b.chain[i].max(), a[i]);
        total += a[i];
      }
      RationalVector x = RationalVector::from_entries(std::move(es));
      NormValue v = ev.evaluate(norm, x).value;
      NormValue target = NormValue::exact(cert.rho * total);
      auto cmp = NormValue::compare(v, target, lim.root_scale_bits);
      if (!cmp || *cmp < 0) {
        out.failed_base = b.base;
        out.failed_coeffs = a;
        out.failure_kind = "lower-bound";
        return out;
      }
      if (cert.rho == 1) {
        auto eq = NormValue::exact_compare(v, NormValue::exact(total));
        if (!eq || *eq != 0) {
          out.failed_base = b.base;
          out.failed_coeffs = a;
          out.failure_kind = "equality";
          return out;
        }
        ++out.equalities;
      }
    }
  }
  out.pass = true;
  return out;
}

// Minimal integer i with 5 * i^(1/p) < (rho/16) * i, by exact power
// comparison: for p = u/v this is i^(u-v) * num > den where num/den =
// (80/rho)^u. Requires rho in (0,1] and p > 1 (at p = 1 no i exists).
inline BigInt threshold_index(const Rational& rho, const Exponent& p) {
  if (rho <= 0 || rho > 1) throw std::invalid_argument("threshold: rho must be in (0,1]");
  Rational bound = Rational(80) / rho;  // i^(1-1/p) must exceed this
  if (p.is_infinite()) {
    // i > 80/rho
    BigInt q = bound.get_num() / bound.get_den();
    return q + 1;
  }
  if (p.value() <= 1) throw std::invalid_argument("threshold: p must exceed 1");
  unsigned long u = p.u(), v = p.v();
  unsigned long k = u - v;
  Rational target = pow_ui(bound, u);  // i^k must exceed this
  const BigInt& num = target.get_num();
  const BigInt& den = target.get_den();
  BigInt i0;
  mpz_root(i0.get_mpz_t(), BigInt(num / den).get_mpz_t(), k);
  if (i0 < 1) i0 = 1;
  while (pow_ui(i0, k) * den <= num) ++i0;
  return i0;
}

// true iff 5 * i^(1/p) < (rho/16) * i, exactly
inline bool threshold_holds(const BigInt& i, const Rational& rho, const Exponent& p) {
  if (rho <= 0 || rho > 1) throw std::invalid_argument("threshold: rho must be in (0,1]");
  if (i < 1) throw std::invalid_argument("threshold: i must be >= 1");
  Rational bound = Rational(80) / rho;
  if (p.is_infinite()) return Rational(i) > bound;
  if (p.value() <= 1) throw std::invalid_argument("threshold: p must exceed 1");
  unsigned long u = p.u(), v = p.v();
  // i^((u-v)/u) > 80/rho  <=>  i^(u-v) > (80/rho)^u
  return Rational(pow_ui(i, u - v)) > pow_ui(bound, u);
}

struct WitnessOutcome {
  FiniteSet base;           // maximal member of S_{alpha+1}, min = i1, ratio-3 growth
  std::int64_t consumed = 0;
  Rational mass;            // total l1 mass of the summed averages
  bool mass_ok = false;     // mass == i1 exactly
  bool support_ok = false;  // supports tile the base set exactly
  NormValue norm;           // ||sum x_n||_{X_alpha^p}
  NormValue bound;          // 5 * i1^(1/p)
  bool norm_ok = false;
  std::vector<FiniteSet> norm_witness;
  bool pass() const { return mass_ok && support_ok && norm_ok; }
};

// Builds the witness set E = {i1 * 3^k} maximal in S_{alpha+1}, runs the
// averages over the stream it opens, and checks the two finite facts:
// total mass = i1 and ||sum x_n||_{X_alpha^p} <= 5 * i1^(1/p).
inline WitnessOutcome prop42_witness(NormEvaluator& ev, const Ordinal& alpha, const Exponent& p,
                                     std::int64_t i1) {
  if (i1 < 1) throw std::invalid_argument("witness: i1 must be >= 1");
  const Limits& lim = ev.limits();
  SchreierFamily& succ = ev.family(alpha.successor());

  FiniteSet e({i1});
  if (!succ.contains(e)) throw std::logic_error("witness: singleton not a member");
  while (true) {
    std::int64_t cand;
    if (__builtin_mul_overflow(e.max(), std::int64_t(3), &cand))
      throw budget_error("witness: extension index overflows 64 bits");
    FiniteSet probe = e.with_appended(cand);
    if (!succ.contains(probe)) break;
    e = std::move(probe);
    if (static_cast<std::int64_t>(e.size()) > lim.entry_budget)
      throw budget_error("witness: extension exceeds the entry budget");
  }

  WitnessOutcome out;
  out.base = e;
  IndexStream stream = IndexStream::geometric(e.elements(), 3, true);
  AveragePrefix prefix = generate_averages(alpha, stream, i1, lim);
  out.consumed = prefix.consumed;

  RationalVector z;
  FiniteSet covered;
  for (const auto& x : prefix.vectors) {
    covered = covered.unite(x.support());
    z += x;
  }
  out.mass = z.l1_mass();
  out.mass_ok = out.mass == i1;
  out.support_ok = covered == e;

  NormResult nr = ev.baernstein_norm(alpha, p, z);
  out.norm = nr.value;
  out.norm_witness = std::move(nr.witness);
  if (p.is_infinite()) {
    out.bound = NormValue::exact(Rational(5));
  } else if (p.is_one()) {
    out.bound = NormValue::exact(Rational(5) * Rational(i1));
  } else {
    // (5 * i1^(1/p))^u = 5^u * i1^v with p = u/v
    Rational powered = pow_ui(Rational(5), p.u()) * pow_ui(Rational(i1), p.v());
    out.bound = NormValue::pth_power(std::move(powered), Exponent::of(Rational(p.u())));
  }
  out.norm_ok = NormValue::certified_le(out.norm, out.bound, lim.root_scale_bits);
  return out;
}

}  // namespace baernstein
