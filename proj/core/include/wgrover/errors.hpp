#pragma once

#include <stdexcept>
#include <string>

namespace wgrover {

// Parameters outside the mathematical domain of an operation (degenerate
// amplitudes, N < 2, alpha = 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A label that is not part of the distribution.
class LookupError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Malformed input: bad JSON specs, unnormalized weights, unparsable CSV.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem failures.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical failures that indicate a broken invariant or an insufficient
// iteration budget.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoPeakError : public NumericError {
public:
  using NumericError::NumericError;
};

class SubspaceError : public NumericError {
public:
  using NumericError::NumericError;
};

}  // namespace wgrover
