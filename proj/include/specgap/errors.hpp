#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specgap {

/// Bad user input: malformed specs, unknown names, invalid parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: non-finite values, iterations that refuse to converge.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured memory cap.
struct MemoryCapError : std::runtime_error {
  MemoryCapError(const std::string& what, int suggested)
      : std::runtime_error(what), suggested_parameter(suggested) {}
  int suggested_parameter;  // largest parameter value estimated to fit
};

}  // namespace specgap
