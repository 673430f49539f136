#pragma once

#include <stdexcept>
#include <string>

namespace hball {

// Input violates a documented precondition of the operation.
struct ContractError : std::invalid_argument {
  explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Structurally valid input on which the requested construction degenerates
// (inner function where a sublevel set is needed, empty kernel basis, ...).
struct DegenerateInputError : std::runtime_error {
  explicit DegenerateInputError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Numerical failure inside an algorithm (e.g. a null vector whose residual
// exceeds tolerance). Signals conditioning trouble, not bad input.
struct ConditioningError : std::runtime_error {
  explicit ConditioningError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace hball
