#pragma once

#include <stdexcept>

namespace medgen {

// Invalid configuration or violated call contract. CLI exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad JSON line, truncated checkpoint). CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed but inconsistent data (duplicate ids, unresolved spans,
// shape mismatches). CLI exit code 2.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Optimizer produced a non-finite loss. CLI exit code 3.
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace medgen
