#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/norms.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/szlenk.hpp"

using baernstein::BigInt;
using baernstein::Branch;
using baernstein::BranchCheckOutcome;
using baernstein::enumerate_branches;
using baernstein::Exponent;
using baernstein::FiniteSet;
using baernstein::make_rational;
using baernstein::NormDescriptor;
using baernstein::NormEvaluator;
using baernstein::NormValue;
using baernstein::Ordinal;
using baernstein::prop42_witness;
using baernstein::Rational;
using baernstein::threshold_holds;
using baernstein::threshold_index;
using baernstein::TreeCertificate;
using baernstein::WitnessOutcome;

namespace {

bool same_value(const NormValue& a, const NormValue& b) {
  auto c = NormValue::exact_compare(a, b);
  return c.has_value() && *c == 0;
}

}  // namespace

TEST_CASE("certificates validate their parameters") {
  REQUIRE_NOTHROW(TreeCertificate(Ordinal::natural(1), Rational(1), 4));
  REQUIRE_THROWS_AS(TreeCertificate(Ordinal::natural(1), Rational(0), 4), std::invalid_argument);
  REQUIRE_THROWS_AS(TreeCertificate(Ordinal::natural(1), Rational(2), 4), std::invalid_argument);
  REQUIRE_THROWS_AS(TreeCertificate(Ordinal::natural(1), Rational(1), 0), std::invalid_argument);
}

TEST_CASE("branch enumeration at small truncations") {
  NormEvaluator ev;
  auto count = [&](const char* alpha, std::int64_t n) {
    return enumerate_branches(ev.family(Ordinal::parse(alpha)),
                              TreeCertificate(Ordinal::parse(alpha), Rational(1), n))
        .size();
  };
  REQUIRE(count("1", 3) == 3);
  REQUIRE(count("2", 4) == 5);
  REQUIRE(count("1", 6) == 13);
  REQUIRE(count("2", 6) == 17);
  REQUIRE(count("w", 6) == 17);

  auto small = enumerate_branches(ev.family(Ordinal::natural(1)),
                                  TreeCertificate(Ordinal::natural(1), Rational(1), 3));
  REQUIRE(small[0].base == FiniteSet({1}));
  REQUIRE(small[1].base == FiniteSet({2, 3}));
  REQUIRE(small[2].base == FiniteSet({3}));
}

TEST_CASE("branches are maximal chains of initial segments") {
  NormEvaluator ev;
  Ordinal a = Ordinal::natural(2);
  const auto& fam = ev.family(a);
  TreeCertificate cert(a, Rational(1), 6);
  for (const Branch& b : enumerate_branches(ev.family(a), cert)) {
    CAPTURE(b.base.format());
    REQUIRE(fam.contains(b.base));
    REQUIRE(b.chain.size() == b.base.size());
    for (std::size_t k = 0; k < b.chain.size(); ++k)
      REQUIRE(b.chain[k] == b.base.prefix(k + 1));
    for (std::int64_t m = b.base.max() + 1; m <= cert.truncation; ++m)
      REQUIRE_FALSE(fam.contains(b.base.with_appended(m)));
  }
}

TEST_CASE("branch functionals achieve the full mass at rho one") {
  NormEvaluator ev;
  TreeCertificate cert(Ordinal::natural(1), Rational(1), 4);
  NormDescriptor norm = NormDescriptor::make_baernstein(Ordinal::natural(1), Exponent::integer(2));
  BranchCheckOutcome out = baernstein::verify_branch_lower(ev, cert, norm, 42);
  REQUIRE(out.pass);
  REQUIRE(out.branches == 5);
  REQUIRE(out.samples == 1011);  // 2 * (1 + 200) + 3 * (3 + 200)
  REQUIRE(out.equalities == out.samples);
  REQUIRE_FALSE(out.failed_base.has_value());
}

TEST_CASE("branch lower bounds hold at rho one half against the plain l2 norm") {
  NormEvaluator ev;
  TreeCertificate cert(Ordinal::natural(1), make_rational(1, 2), 4);
  BranchCheckOutcome out =
      baernstein::verify_branch_lower(ev, cert, NormDescriptor::make_lp(Exponent::integer(2)), 42);
  REQUIRE(out.pass);
  REQUIRE(out.equalities == 0);  // only checked at rho = 1
}

TEST_CASE("the sup norm fails the branch lower bound and is reported") {
  NormEvaluator ev;
  TreeCertificate cert(Ordinal::natural(1), Rational(1), 4);
  BranchCheckOutcome out =
      baernstein::verify_branch_lower(ev, cert, NormDescriptor::make_lp(Exponent::infinity()), 42);
  REQUIRE_FALSE(out.pass);
  REQUIRE(out.failure_kind == "lower-bound");
  REQUIRE(out.failed_base == FiniteSet({2, 3}));
  REQUIRE(out.failed_coeffs == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("branch enumeration refuses truncations beyond the ceiling") {
  NormEvaluator ev;
  REQUIRE_THROWS_AS(enumerate_branches(ev.family(Ordinal::natural(1)),
                                       TreeCertificate(Ordinal::natural(1), Rational(1), 25)),
                    baernstein::budget_error);
}

TEST_CASE("index thresholds are computed by exact power comparison") {
  REQUIRE(threshold_index(Rational(1), Exponent::integer(2)) == 6401);
  REQUIRE(threshold_holds(BigInt(6401), Rational(1), Exponent::integer(2)));
  REQUIRE_FALSE(threshold_holds(BigInt(6400), Rational(1), Exponent::integer(2)));

  REQUIRE(threshold_index(make_rational(1, 2), Exponent::integer(2)) == 25601);
  REQUIRE(threshold_index(Rational(1), Exponent::infinity()) == 81);
  REQUIRE_FALSE(threshold_holds(BigInt(81) - 1, Rational(1), Exponent::infinity()));
  REQUIRE(threshold_index(Rational(1), Exponent::parse("3/2")) == 512001);
  REQUIRE_FALSE(threshold_holds(BigInt(512000), Rational(1), Exponent::parse("3/2")));
  REQUIRE(threshold_holds(BigInt(512001), Rational(1), Exponent::parse("3/2")));

  REQUIRE_THROWS_AS(threshold_index(Rational(1), Exponent::integer(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(threshold_index(Rational(0), Exponent::integer(2)), std::invalid_argument);
  REQUIRE_THROWS_AS(threshold_index(Rational(2), Exponent::integer(2)), std::invalid_argument);
  REQUIRE_THROWS_AS(threshold_holds(BigInt(0), Rational(1), Exponent::integer(2)),
                    std::invalid_argument);
}

TEST_CASE("the averaged witness meets its mass and norm budget") {
  NormEvaluator ev;
  WitnessOutcome w = prop42_witness(ev, Ordinal::natural(1), Exponent::integer(2), 2);
  REQUIRE(w.pass());
  REQUIRE(w.mass == 2);
  REQUIRE(w.support_ok);
  REQUIRE(w.base.size() == 20);
  REQUIRE(w.base.min() == 2);
  REQUIRE(w.base.max() == 2324522934LL);  // 2 * 3^19
  REQUIRE(w.consumed == 20);
  REQUIRE(same_value(w.norm, NormValue::pth_power(Rational(2), Exponent::integer(2))));
  REQUIRE(same_value(w.bound, NormValue::pth_power(Rational(50), Exponent::integer(2))));
  REQUIRE(w.norm_witness.size() == 2);  // the pair block and the 18-element block
  REQUIRE(w.norm_witness[0] == FiniteSet({2, 6}));
}

TEST_CASE("the witness degenerates gracefully at the smallest seed index") {
  NormEvaluator ev;
  WitnessOutcome w = prop42_witness(ev, Ordinal::natural(1), Exponent::integer(2), 1);
  REQUIRE(w.pass());
  REQUIRE(w.mass == 1);
  REQUIRE(w.base == FiniteSet({1}));
  REQUIRE(w.consumed == 1);
  REQUIRE(same_value(w.norm, NormValue::exact(Rational(1))));

  WitnessOutcome flat = prop42_witness(ev, Ordinal::natural(1), Exponent::infinity(), 2);
  REQUIRE(flat.pass());
  REQUIRE(flat.norm.exact_value() == 1);
  REQUIRE(flat.bound.exact_value() == 5);
}

TEST_CASE("witness construction reports when indices leave 64 bits") {
  NormEvaluator ev;
  REQUIRE_THROWS_AS(prop42_witness(ev, Ordinal::natural(2), Exponent::integer(2), 2),
                    baernstein::budget_error);
  REQUIRE_THROWS_AS(prop42_witness(ev, Ordinal::natural(1), Exponent::integer(2), 0),
                    std::invalid_argument);
}
