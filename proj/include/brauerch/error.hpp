#pragma once

#include <stdexcept>
#include <string>

namespace brauerch {

// Base for every error raised by the library. The C API maps the concrete
// subclasses onto status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A violated precondition: a shape outside the group's bound, an index out of
// range, a malformed partition string, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Something that cannot happen if the mathematics is implemented correctly.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace brauerch
