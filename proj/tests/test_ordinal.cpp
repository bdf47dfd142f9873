#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "baernstein/ordinal.hpp"

using baernstein::Ordinal;

TEST_CASE("cnf literals parse and format round-trip") {
  for (const char* s : {"0", "1", "5", "w", "w + 1", "w*2", "w^2", "w^2*3 + w*2 + 5",
                        "w^(w)", "w^(w + 1)*2 + w^3 + 4"}) {
    CAPTURE(s);
    REQUIRE(Ordinal::parse(s).format() == s);
  }
  REQUIRE(Ordinal::parse("  w^2+w  ").format() == "w^2 + w");
  REQUIRE(Ordinal::parse("w^1").format() == "w");
}

TEST_CASE("parse rejects malformed literals") {
  REQUIRE_THROWS_AS(Ordinal::parse(""), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal::parse("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal::parse("w^"), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal::parse("w*0"), std::invalid_argument);
  // terms must be in strictly descending exponent order (canonical form)
  REQUIRE_THROWS_AS(Ordinal::parse("1 + w"), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal::parse("w + w"), std::invalid_argument);
}

TEST_CASE("constructors agree with parsed literals") {
  REQUIRE(Ordinal() == Ordinal::parse("0"));
  REQUIRE(Ordinal::natural(5) == Ordinal::parse("5"));
  REQUIRE(Ordinal::omega() == Ordinal::parse("w"));
  REQUIRE(Ordinal::omega_power(Ordinal::natural(1), 2) == Ordinal::parse("w*2"));
  REQUIRE(Ordinal::omega_power(Ordinal::omega()) == Ordinal::parse("w^(w)"));
}

TEST_CASE("kind classification") {
  REQUIRE(Ordinal().is_zero());
  REQUIRE(Ordinal().kind() == Ordinal::Kind::zero);
  REQUIRE(Ordinal::natural(3).kind() == Ordinal::Kind::successor);
  REQUIRE(Ordinal::parse("w + 3").kind() == Ordinal::Kind::successor);
  REQUIRE(Ordinal::omega().kind() == Ordinal::Kind::limit);
  REQUIRE(Ordinal::parse("w*2").kind() == Ordinal::Kind::limit);
  REQUIRE(Ordinal::parse("w^2 + w").kind() == Ordinal::Kind::limit);
}

TEST_CASE("comparison is a strict total order on a sample chain") {
  std::vector<Ordinal> chain;
  for (const char* s : {"0", "1", "2", "17", "w", "w + 1", "w + 2", "w*2", "w*2 + 1",
                        "w^2", "w^2 + w", "w^2*2", "w^3", "w^(w)", "w^(w) + w^2",
                        "w^(w)*2", "w^(w + 1)"})
    chain.push_back(Ordinal::parse(s));
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      CAPTURE(i, j);
      REQUIRE((chain[i] < chain[j]) == (i < j));
      REQUIRE((chain[i] == chain[j]) == (i == j));
    }
}

TEST_CASE("successor and predecessor are inverse") {
  REQUIRE(Ordinal::natural(4).successor() == Ordinal::natural(5));
  REQUIRE(Ordinal().successor() == Ordinal::natural(1));
  REQUIRE(Ordinal::omega().successor().format() == "w + 1");
  REQUIRE(Ordinal::parse("w + 1").predecessor() == Ordinal::omega());
  for (const char* s : {"1", "w + 1", "w^2*3 + 7", "w^(w) + 2"}) {
    Ordinal o = Ordinal::parse(s);
    REQUIRE(o.successor().predecessor() == o);
  }
  REQUIRE_THROWS_AS(Ordinal::omega().predecessor(), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal().predecessor(), std::invalid_argument);
}

TEST_CASE("fundamental sequences take their standard values") {
  REQUIRE(Ordinal::omega().fundamental(7) == Ordinal::natural(7));
  REQUIRE(Ordinal::parse("w*2").fundamental(4).format() == "w + 4");
  REQUIRE(Ordinal::parse("w^2").fundamental(3).format() == "w*3");
  REQUIRE(Ordinal::parse("w^(w)").fundamental(2).format() == "w^2");
  REQUIRE(Ordinal::parse("w^2 + w").fundamental(5).format() == "w^2 + 5");
  REQUIRE(Ordinal::parse("w^2*2").fundamental(3).format() == "w^2 + w*3");
}

TEST_CASE("fundamental sequences increase strictly below their limit") {
  for (const char* s : {"w", "w*2", "w^2", "w^(w)", "w^3 + w^2*2"}) {
    Ordinal lim = Ordinal::parse(s);
    CAPTURE(s);
    for (std::uint64_t n = 1; n <= 5; ++n) {
      REQUIRE(lim.fundamental(n) < lim);
      if (n > 1) REQUIRE(lim.fundamental(n - 1) < lim.fundamental(n));
    }
  }
}

TEST_CASE("fundamental sequence preconditions") {
  REQUIRE_THROWS_AS(Ordinal::natural(2).fundamental(1), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal().fundamental(1), std::invalid_argument);
  REQUIRE_THROWS_AS(Ordinal::omega().fundamental(0), std::invalid_argument);
}
