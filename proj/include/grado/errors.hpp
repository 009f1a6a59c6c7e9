#pragma once

#include <stdexcept>
#include <string>

namespace grado {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (CLI exit code 1).
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A twisted partial action extracted from a graded ring failed re-verification.
class ExtractionInvalid : public Error {
 public:
  using Error::Error;
};

/// A construction produced data that failed its own validation.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check that must hold mathematically did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace grado
