#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by inversion when the input (or a required block of it) is singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// rank(A) differs from the 2N+2r the caller asked for.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// A skew tensor with a nonzero Λ²H^∨⊗S²V^∨ component.
class NotInSummand : public Error {
 public:
  using Error::Error;
};

class NonInjective : public Error {
 public:
  using Error::Error;
};

class ConditionIrViolated : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace instanton
