#pragma once

#include <stdexcept>
#include <string>

namespace monograd {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the operation's domain (zero ideal where a nonzero one
/// is required, non-squarefree generator, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or search cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the supported machine-integer range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed external document (ideal/graph JSON, monomial string).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace monograd
