#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flexmeadow {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact field inverse of zero was requested.
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

/// A literal, term, or law line failed to parse. `pos` is a 0-based
/// character offset into the offending source string.
struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(const std::string& msg, std::size_t pos_)
      : Error(msg + " at position " + std::to_string(pos_)), pos(pos_) {}
};

/// A term mentions a variable with no binding in the environment.
struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'") {}
};

/// The `err` constant was evaluated in a model that has no error element.
struct ErrUnsupported : Error {
  ErrUnsupported() : Error("'err' is not available in this model") {}
  explicit ErrUnsupported(const std::string& msg) : Error(msg) {}
};

/// A finite-field model was requested with an unusable modulus.
struct InvalidModulus : Error {
  explicit InvalidModulus(const std::string& msg) : Error(msg) {}
};

/// A value fed to a restricted model lies outside that model's carrier set.
struct OutOfCarrier : Error {
  explicit OutOfCarrier(const std::string& msg) : Error(msg) {}
};

/// catalog() was asked for a name it does not know.
struct UnknownCatalog : Error {
  explicit UnknownCatalog(const std::string& name)
      : Error("unknown catalog '" + name + "'") {}
};

/// Bad command-line usage or configuration.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace flexmeadow
