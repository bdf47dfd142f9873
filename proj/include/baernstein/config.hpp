#pragma once

// Effective run configuration: resource budgets, falsifier seed, interval
// tolerance and the ordinal ceiling. Loaded from JSON with per-field
// defaults; the CLI layers flag overrides on top and embeds the effective
// configuration in every report.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "baernstein/limits.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"

namespace baernstein {

struct Config {
  Limits limits;
  std::uint64_t seed = 42;
  Ordinal ordinal_ceiling = Ordinal::omega_power(Ordinal::omega());  // w^w

  nlohmann::json to_json() const {
    return {{"enumeration_ceiling", limits.enumeration_ceiling},
            {"support_ceiling", limits.support_ceiling},
            {"composite_support_ceiling", limits.composite_support_ceiling},
            {"entry_budget", limits.entry_budget},
            {"coefficient_budget", limits.coefficient_budget},
            {"limit_branch_budget", limits.limit_branch_budget},
            {"maximality_window", limits.maximality_window},
            {"root_scale_bits", limits.root_scale_bits},
            {"interval_tolerance", to_string(limits.interval_tolerance)},
            {"seed", seed},
            {"ordinal_ceiling", ordinal_ceiling.format()}};
  }

  static Config from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    Config c;
    auto geti = [&](const char* key, std::int64_t& slot) {
      if (!j.contains(key)) return;
      if (!j[key].is_number_integer())
        throw std::invalid_argument(std::string("config: ") + key + " must be an integer");
      slot = j[key].get<std::int64_t>();
      if (slot < 0) throw std::invalid_argument(std::string("config: ") + key + " must be >= 0");
    };
    geti("enumeration_ceiling", c.limits.enumeration_ceiling);
    geti("support_ceiling", c.limits.support_ceiling);
    geti("composite_support_ceiling", c.limits.composite_support_ceiling);
    geti("entry_budget", c.limits.entry_budget);
    geti("coefficient_budget", c.limits.coefficient_budget);
    geti("limit_branch_budget", c.limits.limit_branch_budget);
    if (j.contains("maximality_window")) {
      std::int64_t w = 0;
      geti("maximality_window", w);
      if (w < 1) throw std::invalid_argument("config: maximality_window must be >= 1");
      c.limits.maximality_window = static_cast<int>(w);
    }
    if (j.contains("root_scale_bits")) {
      std::int64_t b = 0;
      geti("root_scale_bits", b);
      if (b < 4 || b > 65536)
        throw std::invalid_argument("config: root_scale_bits out of range");
      c.limits.root_scale_bits = static_cast<unsigned>(b);
    }
    if (j.contains("interval_tolerance")) {
      const auto& t = j["interval_tolerance"];
      if (!t.is_string())
        throw std::invalid_argument("config: interval_tolerance must be a string literal");
      c.limits.interval_tolerance = rational_from_string(t.get<std::string>());
      if (c.limits.interval_tolerance <= 0)
        throw std::invalid_argument("config: interval_tolerance must be positive");
    }
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
        throw std::invalid_argument("config: seed must be an integer");
      c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("ordinal_ceiling")) {
      if (!j["ordinal_ceiling"].is_string())
        throw std::invalid_argument("config: ordinal_ceiling must be an ordinal literal");
      c.ordinal_ceiling = Ordinal::parse(j["ordinal_ceiling"].get<std::string>());
    }
    return c;
  }

  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("config: bad JSON in '" + path + "': " + e.what());
    }
    return from_json(j);
  }
};

}  // namespace baernstein
