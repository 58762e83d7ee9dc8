#pragma once

#include <stdexcept>
#include <string>

namespace exhall {

// Bad user-facing input: malformed documents, unknown labels, unsupported flags.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or sampling pass would exceed the configured work budget.
// Callers may retry with a larger --budget; results are never silently truncated.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace exhall
