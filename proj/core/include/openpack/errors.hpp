#pragma once

#include <stdexcept>
#include <string>

namespace openpack {

// Root of every error the library throws on bad input or unmet hypotheses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range vertex, self-loop, duplicate set member,
// unknown label and similar contract violations.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused an instance above its size guard.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

// The requested optimum does not exist (total domination with an isolated
// vertex).
class UndefinedProblem : public Error {
 public:
  using Error::Error;
};

// A structural precondition (graph class, certificate validity) failed.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// A bounded solver found a solution beyond the bound it was promised.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace openpack
