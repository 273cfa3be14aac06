#pragma once

#include <stdexcept>
#include <string>

namespace arsubcat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's documented precondition (shape, algebra,
/// projectivity, Gorenstein-ness, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class NotFiniteDimensional : public Error {
 public:
  using Error::Error;
};

/// A search bound (degree, dimension, enumeration size) was reached.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class MalformedRelation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

#define ARSUBCAT_CHECK(cond, msg)                                        \
  do {                                                                   \
    if (!(cond)) throw ::arsubcat::InvariantError(std::string(msg));     \
  } while (0)

#define ARSUBCAT_REQUIRE(cond, msg)                                      \
  do {                                                                   \
    if (!(cond)) throw ::arsubcat::PreconditionError(std::string(msg));  \
  } while (0)

}  // namespace arsubcat
