#pragma once

#include <stdexcept>
#include <string>

namespace randcx {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be parsed or violates a structural requirement
/// (duplicate vertices, vertex id out of range, bad file syntax).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a hard enumeration or memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A formula was requested for an input it does not cover.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

}  // namespace randcx
