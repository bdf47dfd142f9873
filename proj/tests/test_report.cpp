#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "baernstein/config.hpp"
#include "baernstein/exponent.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/interval.hpp"
#include "baernstein/limits.hpp"
#include "baernstein/norm_value.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/report.hpp"

using baernstein::CheckReport;
using baernstein::Config;
using baernstein::Exponent;
using baernstein::FiniteSet;
using baernstein::Limits;
using baernstein::make_rational;
using baernstein::NormValue;
using baernstein::Rational;
using baernstein::RationalInterval;
using nlohmann::json;

TEST_CASE("norm values serialize by mode") {
  json e = baernstein::norm_value_json(NormValue::exact(make_rational(3, 2)));
  REQUIRE(e == json({{"mode", "exact"}, {"value", "3/2"}}));

  json p = baernstein::norm_value_json(NormValue::pth_power(Rational(5), Exponent::integer(2)));
  REQUIRE(p == json({{"mode", "pth-power"}, {"p", "2"}, {"value_pow", "5"}}));

  json iv = baernstein::norm_value_json(
      NormValue::interval(RationalInterval{make_rational(1, 3), make_rational(1, 2)}));
  REQUIRE(iv == json({{"mode", "interval"}, {"lo", "1/3"}, {"hi", "1/2"}}));
}

TEST_CASE("witness partitions and coefficients serialize as string arrays") {
  REQUIRE(baernstein::partition_json({FiniteSet({1}), FiniteSet({2, 3})}) ==
          json::array({"{1}", "{2,3}"}));
  REQUIRE(baernstein::coefficients_json({Rational(1), make_rational(-2, 3)}) ==
          json::array({"1", "-2/3"}));
}

TEST_CASE("check reports carry a stable schema") {
  CheckReport r;
  r.check = "demo.check";
  r.set_status(true);
  r.parameters["alpha"] = "w";
  r.observe("count", 7);
  r.notes.push_back("a note");
  r.runtime_ms = 123;

  json j = r.to_json();
  REQUIRE(j["schema"] == 1);
  REQUIRE(j["check"] == "demo.check");
  REQUIRE(j["status"] == "pass");
  REQUIRE(j["observed"][0]["label"] == "count");
  REQUIRE(j["observed"][0]["value"] == 7);
  REQUIRE(j["runtime_ms"] == 123);

  REQUIRE_FALSE(r.canonical_json().contains("runtime_ms"));
  REQUIRE(r.line() == "PASS  demo.check");
  r.set_status(false);
  REQUIRE(r.line() == "FAIL  demo.check");
  CheckReport fresh;
  fresh.check = "x";
  REQUIRE(fresh.line() == "INFO  x");
}

TEST_CASE("canonical dumps are byte-identical across differing runtimes") {
  CheckReport a;
  a.check = "demo";
  a.set_status(true);
  a.observe("value", "5");
  CheckReport b = a;
  a.runtime_ms = 1;
  b.runtime_ms = 99999;
  REQUIRE(baernstein::canonical_dump({a}) == baernstein::canonical_dump({b}));
}

TEST_CASE("configs round-trip through JSON with per-field defaults") {
  Config def;
  REQUIRE(Config::from_json(json::object()).to_json() == def.to_json());

  json j = {{"enumeration_ceiling", 12},
            {"support_ceiling", 9},
            {"composite_support_ceiling", 7},
            {"entry_budget", 50},
            {"coefficient_budget", 11},
            {"limit_branch_budget", 1000},
            {"maximality_window", 3},
            {"root_scale_bits", 128},
            {"interval_tolerance", "1/1024"},
            {"seed", 7},
            {"ordinal_ceiling", "w^2"}};
  Config c = Config::from_json(j);
  REQUIRE(c.limits.enumeration_ceiling == 12);
  REQUIRE(c.limits.support_ceiling == 9);
  REQUIRE(c.limits.composite_support_ceiling == 7);
  REQUIRE(c.limits.entry_budget == 50);
  REQUIRE(c.limits.coefficient_budget == 11);
  REQUIRE(c.limits.limit_branch_budget == 1000);
  REQUIRE(c.limits.maximality_window == 3);
  REQUIRE(c.limits.root_scale_bits == 128);
  REQUIRE(c.limits.interval_tolerance == make_rational(1, 1024));
  REQUIRE(c.seed == 7);
  REQUIRE(c.ordinal_ceiling.format() == "w^2");
  REQUIRE(Config::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("config validation rejects malformed fields") {
  REQUIRE_THROWS_AS(Config::from_json(json::array()), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"support_ceiling", "big"}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"entry_budget", -1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"maximality_window", 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"root_scale_bits", 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"interval_tolerance", 0.5}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"interval_tolerance", "0"}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"seed", "forty-two"}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"ordinal_ceiling", 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Config::from_json({{"ordinal_ceiling", "x"}}), std::invalid_argument);
}

TEST_CASE("config files load with clear failure modes") {
  REQUIRE_THROWS_AS(Config::load("definitely-missing.json"), std::invalid_argument);

  const char* path = "config_scratch_test.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  REQUIRE_THROWS_AS(Config::load(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << R"({"seed": 9, "support_ceiling": 6})";
  }
  Config c = Config::load(path);
  REQUIRE(c.seed == 9);
  REQUIRE(c.limits.support_ceiling == 6);
  REQUIRE(c.limits.enumeration_ceiling == Limits{}.enumeration_ceiling);
  std::remove(path);
}

TEST_CASE("documented budget defaults") {
  Limits lim;
  REQUIRE(lim.enumeration_ceiling == 20);
  REQUIRE(lim.support_ceiling == 25);
  REQUIRE(lim.composite_support_ceiling == 20);
  REQUIRE(lim.entry_budget == 1'000'000);
  REQUIRE(lim.coefficient_budget == 200);
  REQUIRE(lim.limit_branch_budget == 1'000'000);
  REQUIRE(lim.maximality_window == 1);
  REQUIRE(lim.root_scale_bits == 64);
  REQUIRE(lim.interval_tolerance == make_rational(1, 1'000'000'000'000LL));
}
