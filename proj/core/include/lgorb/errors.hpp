#pragma once

#include <stdexcept>

namespace lgorb {

// Inconsistent setup: mismatched field orders, bad option values.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that parses but violates a model invariant (W not G-invariant, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that cannot proceed (non-isolated singularity, no stabilization).
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : ComputationError {
  using ComputationError::ComputationError;
};

}  // namespace lgorb
