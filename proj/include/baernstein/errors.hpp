#pragma once

#include <stdexcept>
#include <string>

namespace baernstein {

// Raised when an operation would exceed a configured resource budget
// (entry counts, enumeration ceilings, index overflow). Distinct from
// std::invalid_argument, which signals bad input or a violated precondition.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace baernstein
