#pragma once

#include <stdexcept>
#include <string>

namespace waldcone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two classes (or a class and a multiplicity vector) live in different ranks.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Rank outside the range an operation supports.
class UnsupportedRankError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// reflect() was handed a class that is not a root.
class InvalidRootError : public Error {
 public:
  using Error::Error;
};

/// Weyl orbit closure exceeded its element cap.
class OrbitTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A surface configuration failed validation.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Multiplicities violate the proximity inequalities of the configuration.
class ProximityViolationError : public Error {
 public:
  using Error::Error;
};

/// The Waldschmidt LP has no feasible point: no dL - mE_Z is in the cone.
class InconsistentConfigurationError : public Error {
 public:
  using Error::Error;
};

/// No class pairing positively with every generator could be found.
class BoundingFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace waldcone
