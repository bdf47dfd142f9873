#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>

#include "baernstein/averages.hpp"
#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/schreier.hpp"
#include "baernstein/vector.hpp"

using baernstein::AveragePrefix;
using baernstein::FiniteSet;
using baernstein::generate_averages;
using baernstein::IndexStream;
using baernstein::lemma31_check;
using baernstein::Limits;
using baernstein::make_rational;
using baernstein::Ordinal;
using baernstein::Rational;
using baernstein::RationalVector;
using baernstein::SchreierFamily;

namespace {
IndexStream powers_of_three() { return IndexStream::geometric({1}, 3, true); }
}

TEST_CASE("level zero emits unit vectors along the stream") {
  AveragePrefix p = generate_averages(Ordinal::natural(0), powers_of_three(), 2, Limits{});
  REQUIRE(p.vectors.size() == 2);
  REQUIRE(p.vectors[0] == RationalVector::from_entries({{1, Rational(1)}}));
  REQUIRE(p.vectors[1] == RationalVector::from_entries({{3, Rational(1)}}));
  REQUIRE(p.consumed == 2);
}

TEST_CASE("first level averages the next block of units") {
  AveragePrefix p = generate_averages(Ordinal::natural(1), powers_of_three(), 2, Limits{});
  REQUIRE(p.vectors[0] == RationalVector::from_entries({{1, Rational(1)}}));
  REQUIRE(p.vectors[1] == RationalVector::from_entries({{3, make_rational(1, 3)},
                                                        {9, make_rational(1, 3)},
                                                        {27, make_rational(1, 3)}}));
  REQUIRE(p.consumed == 4);
}

TEST_CASE("a leading index of one collapses the second-level average") {
  AveragePrefix p = generate_averages(Ordinal::natural(2), powers_of_three(), 1, Limits{});
  REQUIRE(p.vectors.size() == 1);
  REQUIRE(p.vectors[0] == RationalVector::from_entries({{1, Rational(1)}}));
}

TEST_CASE("limit stages defer to the stage named by the first index") {
  // first index 1: the limit vector equals the first vector two levels up
  AveragePrefix lim1 = generate_averages(Ordinal::omega(), powers_of_three(), 1, Limits{});
  AveragePrefix succ = generate_averages(Ordinal::natural(2), powers_of_three(), 1, Limits{});
  REQUIRE(lim1.vectors[0] == succ.vectors[0]);
}

TEST_CASE("generated prefixes satisfy the three structural facts") {
  // the deeper family admits only one average before the entry budget binds
  for (auto [s, n] : {std::pair<const char*, std::int64_t>{"1", 2}, {"2", 1}}) {
    Ordinal a = Ordinal::parse(s);
    AveragePrefix p = generate_averages(a, IndexStream::geometric({2}, 3, true), n, Limits{});
    CAPTURE(s);
    SchreierFamily fam(a);
    FiniteSet covered;
    for (const auto& x : p.vectors) {
      // convex combination: positive coefficients with exact total mass one
      REQUIRE(x.l1_mass() == 1);
      for (const auto& [i, v] : x.entries()) REQUIRE(v > 0);
      // each support is a maximal member
      REQUIRE(fam.contains(x.support()));
      REQUIRE(fam.is_maximal(x.support()));
      // supports are successive
      if (!covered.empty()) REQUIRE(covered.max() < x.support().min());
      covered = covered.unite(x.support());
    }
    // the union is an initial segment of the stream
    baernstein::StreamCursor cur(p.stream);
    for (std::int64_t k = 0; k < p.consumed; ++k)
      REQUIRE(covered.contains(cur.next()));
    REQUIRE(static_cast<std::int64_t>(covered.size()) == p.consumed);
  }
}

TEST_CASE("generation is deterministic") {
  AveragePrefix a = generate_averages(Ordinal::natural(1), powers_of_three(), 2, Limits{});
  AveragePrefix b = generate_averages(Ordinal::natural(1), powers_of_three(), 2, Limits{});
  REQUIRE(a.vectors.size() == b.vectors.size());
  for (std::size_t k = 0; k < a.vectors.size(); ++k) REQUIRE(a.vectors[k] == b.vectors[k]);
  REQUIRE(a.consumed == b.consumed);
}

TEST_CASE("streams validate and serialize") {
  IndexStream s = IndexStream::geometric({1, 3, 9}, 3, true);
  IndexStream back = IndexStream::from_json(s.to_json());
  REQUIRE(back.prefix == s.prefix);
  REQUIRE(back.ratio == s.ratio);
  REQUIRE(back.require_triple_growth == s.require_triple_growth);
  REQUIRE_THROWS_AS(IndexStream::from_json(nlohmann::json::parse("{}")),
                    std::invalid_argument);
  // declared triple growth is validated against the actual elements
  REQUIRE_THROWS_AS(
      generate_averages(Ordinal::natural(1), IndexStream::geometric({1, 2}, 3, true), 1,
                        Limits{}),
      std::invalid_argument);
}

TEST_CASE("entry budgets fail loudly instead of truncating") {
  Limits tight;
  tight.entry_budget = 3;
  REQUIRE_THROWS_AS(
      generate_averages(Ordinal::natural(1), IndexStream::geometric({5}, 3, true), 1, tight),
      baernstein::budget_error);
  // at a limit stage a later index forces enormous supports: the guard
  // trips immediately rather than after a million draws
  REQUIRE_THROWS_AS(
      generate_averages(Ordinal::omega(), IndexStream::geometric({2}, 3, true), 1, Limits{}),
      baernstein::budget_error);
}

TEST_CASE("the summed-average mass bound holds exhaustively on a window") {
  AveragePrefix p = generate_averages(Ordinal::natural(1), powers_of_three(), 2, Limits{});
  baernstein::L1BoundOutcome out = lemma31_check(p, 2, 12, Limits{});
  REQUIRE(out.pass);
  REQUIRE(out.max_mass == 1);
  REQUIRE(out.witness == FiniteSet({1}));
  REQUIRE(out.members_checked > 0);

  // level zero: any member picks single unit coefficients
  AveragePrefix p0 = generate_averages(Ordinal::natural(0), powers_of_three(), 2, Limits{});
  baernstein::L1BoundOutcome out0 = lemma31_check(p0, 2, 9, Limits{});
  REQUIRE(out0.pass);
  REQUIRE(out0.max_mass == 1);
}

TEST_CASE("the mass bound check validates its inputs") {
  AveragePrefix p = generate_averages(Ordinal::natural(1), powers_of_three(), 2, Limits{});
  REQUIRE_THROWS_AS(lemma31_check(p, 3, 12, Limits{}), std::invalid_argument);
  REQUIRE_THROWS_AS(lemma31_check(p, 2, 25, Limits{}), baernstein::budget_error);
  AveragePrefix loose =
      generate_averages(Ordinal::natural(1), IndexStream::geometric({1}, 3, false), 2, Limits{});
  REQUIRE_THROWS_AS(lemma31_check(loose, 2, 12, Limits{}), std::invalid_argument);
}
