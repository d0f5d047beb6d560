#pragma once
#include <stdexcept>
#include <string>

namespace logres {

// bad user input (malformed JSON, inconsistent seeds, non-reduced data): CLI exit 2
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a computation could not be completed (typically: truncation too low to decide
// something, or a degree cap was hit): CLI exit 3
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationError : ComputationError {
  using ComputationError::ComputationError;
};

// an internal cross-check failed; indicates a bug or broken precondition: CLI exit 4
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace logres
