#pragma once

#include <stdexcept>
#include <string>

namespace quadinv {

// Argument outside the documented range of an operation (order, index, r).
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Malformed or inconsistent input: bad sign sequence, det != 1, bad JSON.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Half-integer labels that do not form a triad.
struct TriadError : ValidationError {
  using ValidationError::ValidationError;
};

// Operations on MultiPoly values built over different variable lists.
struct IncompatibleVariablesError : ValidationError {
  using ValidationError::ValidationError;
};

// A quantity that must be nonzero vanished (e.g. the j-invariant denominator).
struct DegenerateFormError : std::domain_error {
  using std::domain_error::domain_error;
};

// Broken internal invariant. Reaching this is a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace quadinv
