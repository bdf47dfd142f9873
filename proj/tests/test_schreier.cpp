#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/oracles.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/schreier.hpp"

using baernstein::FiniteSet;
using baernstein::Limits;
using baernstein::Ordinal;
using baernstein::SchreierFamily;

namespace {

// all subsets of {1..n} as FiniteSets, in mask order
std::vector<FiniteSet> subsets(std::int64_t n) {
  std::vector<FiniteSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::int64_t> elems;
    for (std::int64_t i = 1; i <= n; ++i)
      if (mask & (1ull << (i - 1))) elems.push_back(i);
    out.emplace_back(std::move(elems));
  }
  return out;
}

}  // namespace

TEST_CASE("first-level members within a tiny window, in enumeration order") {
  SchreierFamily fam(Ordinal::natural(1));
  std::vector<FiniteSet> members = fam.members_within(3);
  std::vector<FiniteSet> expected = {FiniteSet{}, FiniteSet({1}), FiniteSet({2}),
                                     FiniteSet({2, 3}), FiniteSet({3})};
  REQUIRE(members == expected);
}

TEST_CASE("member counts at frozen window sizes") {
  REQUIRE(SchreierFamily(Ordinal::natural(1)).members_within(12).size() == 377);
  REQUIRE(SchreierFamily(Ordinal::natural(1)).members_within(18).size() == 6765);
  REQUIRE(SchreierFamily(Ordinal::natural(2)).members_within(4).size() == 9);
  REQUIRE(SchreierFamily(Ordinal::natural(2)).members_within(12).size() == 1825);
  // deep and limit families saturate small windows at the same count
  for (const char* s : {"3", "w", "w + 1", "w*2"}) {
    CAPTURE(s);
    REQUIRE(SchreierFamily(Ordinal::parse(s)).members_within(12).size() == 2049);
  }
}

TEST_CASE("greedy membership agrees with the all-decompositions oracle") {
  baernstein::oracle::MembershipOracle oracle;
  for (const char* s : {"1", "2", "w", "w + 1"}) {
    Ordinal a = Ordinal::parse(s);
    SchreierFamily fam(a);
    for (const FiniteSet& e : subsets(8)) {
      CAPTURE(s, e.format());
      REQUIRE(fam.contains(e) == oracle.member(a, e));
    }
  }
}

TEST_CASE("families are hereditary and spreading on an exhaustive window") {
  for (const char* s : {"3", "w*2"}) {
    CAPTURE(s);
    baernstein::AuditResult res = SchreierFamily(Ordinal::parse(s)).audit(8);
    REQUIRE(res.pass());
    REQUIRE(res.exhaustive_subsets);
    REQUIRE(res.hereditary_failures.empty());
    REQUIRE(res.spreading_failures.empty());
    REQUIRE(res.member_count > 0);
  }
}

TEST_CASE("the empty set and every small singleton are members at every level") {
  for (const char* s : {"0", "1", "2", "3", "w", "w + 1", "w*2"}) {
    SchreierFamily fam(Ordinal::parse(s));
    CAPTURE(s);
    REQUIRE(fam.contains(FiniteSet{}));
    for (std::int64_t n = 1; n <= 12; ++n) REQUIRE(fam.contains(FiniteSet({n})));
  }
}

TEST_CASE("membership constraints bind through the minimum element") {
  SchreierFamily s1(Ordinal::natural(1));
  REQUIRE_FALSE(s1.contains(FiniteSet({1, 2})));  // min 1 caps the size at 1
  REQUIRE(s1.contains(FiniteSet({2, 3})));
  REQUIRE_FALSE(s1.contains(FiniteSet({2, 3, 4})));
  REQUIRE(s1.contains(FiniteSet({3, 5, 9})));
  SchreierFamily s2(Ordinal::natural(2));
  REQUIRE(s2.contains(FiniteSet({2, 3, 4, 5, 6, 7})));   // two blocks {2,3},{4..7}
  REQUIRE_FALSE(s2.contains(FiniteSet({2, 3, 4, 5, 6, 7, 8})));
}

TEST_CASE("maximality probe agrees with a wide brute-force sweep") {
  SchreierFamily fam(Ordinal::natural(2));
  fam.for_each_member(6, [&](const FiniteSet& e) {
    bool brute = true;
    std::int64_t base = e.empty() ? 0 : e.max();
    for (std::int64_t m = base + 1; m <= base + 15; ++m)
      if (fam.contains(e.with_appended(m))) {
        brute = false;
        break;
      }
    CAPTURE(e.format());
    REQUIRE(fam.is_maximal(e) == brute);
  });
  REQUIRE(SchreierFamily(Ordinal::natural(1)).is_maximal(FiniteSet({1})));
  REQUIRE_FALSE(SchreierFamily(Ordinal::natural(1)).is_maximal(FiniteSet({2})));
  REQUIRE_THROWS_AS(SchreierFamily(Ordinal::natural(1)).is_maximal(FiniteSet({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("maximal extensions append the smallest admissible coordinates") {
  SchreierFamily s0(Ordinal::natural(0));
  SchreierFamily s1(Ordinal::natural(1));
  SchreierFamily s2(Ordinal::natural(2));
  REQUIRE(s1.maximal_extension(FiniteSet({3}), 5) == FiniteSet({3, 5, 6}));
  REQUIRE(s0.maximal_extension(FiniteSet({4}), 10) == FiniteSet({4}));
  REQUIRE(s2.maximal_extension(FiniteSet{}, 2) == FiniteSet({2, 3, 4, 5, 6, 7}));
  REQUIRE_THROWS_AS(s1.maximal_extension(FiniteSet({3}), 3), std::invalid_argument);
  REQUIRE_THROWS_AS(s1.maximal_extension(FiniteSet({1, 2}), 5), std::invalid_argument);
}

TEST_CASE("shared membership caches answer like fresh families") {
  SchreierFamily base(Ordinal::omega());
  SchreierFamily rel = base.relative(Ordinal::natural(2));
  SchreierFamily fresh(Ordinal::natural(2));
  for (const FiniteSet& e : subsets(6)) REQUIRE(rel.contains(e) == fresh.contains(e));
}

TEST_CASE("enumeration respects the configured ceiling") {
  SchreierFamily fam(Ordinal::natural(1));
  REQUIRE_THROWS_AS(fam.members_within(21), baernstein::budget_error);
  REQUIRE_THROWS_AS(fam.members_within(-1), std::invalid_argument);
  Limits wide;
  wide.enumeration_ceiling = 27;
  REQUIRE(fam.members_within(27, wide).size() == 514229);
}
