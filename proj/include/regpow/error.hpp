#pragma once

#include <stdexcept>
#include <string>

namespace regpow {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different polynomial rings.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input was violated
/// (non-squarefree ideal where a radical one is required, p = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponent computation left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or closure budget was exceeded.
/// Results are never silently truncated; this is raised instead.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace regpow
