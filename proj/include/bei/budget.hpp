#pragma once
// Raised when a computation blows past its size cap, so sweeps can report
// the instance as out of budget instead of grinding on.

#include <stdexcept>

namespace bei {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bei
