#pragma once

#include <stdexcept>
#include <string>

namespace ajc {

// Precondition or malformed input; the CLI maps it to a usage error.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

// Search or evaluation exceeded a configured budget (state count, window cap).
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required data source (PD code, A-polynomial, ...) is missing for a knot.
struct MissingData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ajc
