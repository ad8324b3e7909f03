#pragma once

#include <stdexcept>
#include <string>

namespace stabcut {

// Mismatched qubit counts between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad user-supplied input: parse failures, invalid construction
// parameters, out-of-range indices, non-commuting stabilizer lists.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A ground-state specification that fails validation (wrong count,
// anti-commuting or dependent fixed logicals).
struct SpecificationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration refused because it exceeds the configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Code distance requested for a code with no logical qubits.
struct UndefinedDistanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency check between two internally computed quantities failed.
// Signals an implementation bug, never valid input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace stabcut
