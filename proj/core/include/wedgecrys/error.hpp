#pragma once

#include <stdexcept>
#include <string>

namespace wedgecrys {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrime : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class UnsupportedHom : public Error {
 public:
  using Error::Error;
};

class RankPrecondition : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class BadDescriptor : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A JSON document that does not follow the v1 schemas.
class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A requested quantity is not determined at the working p-adic precision.
/// `required_precision()` is a sufficient precision when known, else 0.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what, int required = 0)
      : Error(what), required_(required) {}
  int required_precision() const noexcept { return required_; }

 private:
  int required_;
};

/// Raised when a vector claimed to lie in an F-eigenspace fails re-verification.
class DegreeViolation : public Error {
 public:
  using Error::Error;
};

class NotGraded : public Error {
 public:
  using Error::Error;
};

class GradeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace wedgecrys
