#pragma once

#include <stdexcept>
#include <string>

namespace ghlab {

// Invalid input: bad dimensions, malformed files, violated preconditions.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work refused because a configurable size cap would be exceeded.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ghlab
