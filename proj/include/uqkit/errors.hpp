#pragma once

#include <stdexcept>
#include <string>

namespace uqkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(q)") {}
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Denominator vanishes at the requested specialization point.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Specialization at q0 with q0^2 = 1 (or q0 = 0).
class ForbiddenSpecialization : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A representation fails the compatibility condition required by the operation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class QuantumPlaneRelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace uqkit
