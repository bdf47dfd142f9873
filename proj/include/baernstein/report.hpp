#pragma once

// Machine-readable check reports (schema 1). Serialization is canonical:
// object keys sort, witnesses keep insertion order, and the canonical form
// drops runtime_ms so back-to-back runs diff cleanly.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "baernstein/finite_set.hpp"
#include "baernstein/norm_value.hpp"
#include "baernstein/rational.hpp"

namespace baernstein {

inline nlohmann::json norm_value_json(const NormValue& v) {
  switch (v.mode()) {
    case NormValue::Mode::exact:
      return {{"mode", "exact"}, {"value", to_string(v.exact_value())}};
    case NormValue::Mode::pth_power:
      return {{"mode", "pth-power"},
              {"p", v.power().format()},
              {"value_pow", to_string(v.power_value())}};
    case NormValue::Mode::interval:
      return {{"mode", "interval"},
              {"lo", to_string(v.raw_interval().lo)},
              {"hi", to_string(v.raw_interval().hi)}};
  }
  return {};
}

inline nlohmann::json partition_json(const std::vector<FiniteSet>& parts) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : parts) a.push_back(e.format());
  return a;
}

inline nlohmann::json coefficients_json(const std::vector<Rational>& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : a) out.push_back(to_string(q));
  return out;
}

struct CheckReport {
  std::string check;
  std::string status = "info";  // pass | fail | info
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json observed = nlohmann::json::array();   // [{label, value}]
  nlohmann::json witnesses = nlohmann::json::array();
  std::vector<std::string> notes;
  nlohmann::json config = nlohmann::json::object();
  std::int64_t runtime_ms = 0;

  void observe(const std::string& label, nlohmann::json value) {
    observed.push_back({{"label", label}, {"value", std::move(value)}});
  }

  void set_status(bool ok) { status = ok ? "pass" : "fail"; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["check"] = check;
    j["status"] = status;
    j["parameters"] = parameters;
    j["observed"] = observed;
    j["witnesses"] = witnesses;
    j["notes"] = notes;
    j["config"] = config;
    j["runtime_ms"] = runtime_ms;
    return j;
  }

  // runtime excluded: this is the byte-comparable section
  nlohmann::json canonical_json() const {
    nlohmann::json j = to_json();
    j.erase("runtime_ms");
    return j;
  }

  std::string line() const {
    std::string s = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "INFO";
    return s + "  " + check;
  }
};

inline std::string canonical_dump(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.canonical_json());
  return arr.dump(2);
}

}  // namespace baernstein
