#pragma once

#include <stdexcept>
#include <string>

namespace klasika {

/// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (degree too small, negative
/// square root, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The input is valid but outside what the exact methods here can decide,
/// e.g. a residual factor of degree >= 3 without rational roots.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A polynomial that does not split over Q into linear factors and
/// quadratics with negative discriminant.
class UnsupportedFactorization : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

}  // namespace klasika
