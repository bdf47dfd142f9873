#pragma once

#include <cstdint>

#include "baernstein/rational.hpp"

namespace baernstein {

// Resource budgets and numeric tolerances. Every evaluator that can grow
// beyond desk scale takes one of these and raises budget_error rather than
// thrashing. Values here are the documented defaults; the CLI can override
// them from a config file or flags.
struct Limits {
  std::int64_t enumeration_ceiling = 20;          // largest truncation for member enumeration
  std::int64_t support_ceiling = 25;              // largest support size for norm evaluation
  std::int64_t composite_support_ceiling = 20;    // largest support size for blocked norms
  std::int64_t entry_budget = 1'000'000;          // coefficient entries per generation run
  std::int64_t coefficient_budget = 200;          // sampled coefficient vectors per search
  std::int64_t limit_branch_budget = 1'000'000;   // indices tried at limit-ordinal stages
  int maximality_window = 1;                      // extension probes per maximality test
  unsigned root_scale_bits = 64;                  // starting scale for root enclosures
  Rational interval_tolerance = make_rational(1, 1'000'000'000'000LL);  // certified width goal
};

}  // namespace baernstein
