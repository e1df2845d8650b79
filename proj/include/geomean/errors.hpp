#pragma once

#include <stdexcept>

namespace geomean {

// Out-of-domain sizes or bases (CLI exit 2).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent user input: files, schemas, psi domains (CLI exit 2).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Violations of the union composition rule (CLI exit 3).
struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geomean
