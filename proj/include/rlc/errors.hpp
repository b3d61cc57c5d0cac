#pragma once

#include <stdexcept>
#include <string>

namespace rlc {

// Invalid or inconsistent parameters (k > n, d out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured enumeration or sampling budget would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rlc
