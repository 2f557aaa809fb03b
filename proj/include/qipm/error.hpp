#pragma once

#include <stdexcept>
#include <string>

namespace qipm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (dimensions, non-finite data, bad flags).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A dense factorization found the matrix singular to working precision.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A linear-system backend could not deliver an acceptable direction.
class BackendFailure : public Error {
 public:
  using Error::Error;
};

/// The step-length search found no admissible step.
class StepLengthError : public Error {
 public:
  using Error::Error;
};

/// A corrector output could not be pulled back into the inner neighborhood.
class RestorationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qipm
