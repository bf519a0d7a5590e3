#pragma once

#include <stdexcept>
#include <string>

namespace tilek {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad t for a kind, zero sizes, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two operands have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tilek
