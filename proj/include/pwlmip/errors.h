// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_ERRORS_H_
#define PWLMIP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pwlmip {

// Malformed or out-of-contract input data (bad JSON, non-finite samples,
// broken breakpoint ordering).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the function's domain or an index out of range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A PWL function that is neither right- nor left-continuous at its jumps.
class UnsupportedFunctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A formulation builder was handed a function of the wrong continuity class,
// or an indicator variant was requested for a fragment that does not support it.
class WrongMethodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variable or constraint handle that does not belong to the model.
class ModelMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The simplex engine could not converge.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex enumeration refused because the polytope is too large.
class DimensionGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact arithmetic requested on a coefficient that has no short decimal form.
class InexactCoefficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pwlmip

#endif  // PWLMIP_ERRORS_H_
