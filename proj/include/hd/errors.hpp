#pragma once

#include <stdexcept>
#include <string>

namespace hd {

// Violated mathematical precondition (solvability/compatibility condition,
// radius ordering, out-of-range evaluation point, ...).  CLI exit code 3.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure (solver non-convergence, overflow guard, ...).
// CLI exit code 4.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (JSON schema, expression syntax, bad flag values).
// CLI exit code 2.
class schema_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hd
