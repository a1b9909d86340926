#pragma once

#include <stdexcept>
#include <string>

namespace catefs {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two functors were composed whose inner categories differ.
struct DomainMismatch : Error {
  using Error::Error;
};

/// Cells were combined whose boundaries do not line up.
struct BoundaryMismatch : Error {
  using Error::Error;
};

/// A stated precondition of an operation does not hold for the given input.
struct PreconditionFailed : Error {
  using Error::Error;
};

struct NotFullyFaithful : PreconditionFailed {
  using PreconditionFailed::PreconditionFailed;
};

struct NotInvertible : PreconditionFailed {
  using PreconditionFailed::PreconditionFailed;
};

/// Raised by the thin-category functor generator when no monotone map exists.
struct NoFunctorExists : Error {
  using Error::Error;
};

/// A property that the theory guarantees failed to hold.  Always a bug,
/// never a consequence of bad input; maps to exit code 3 in the CLI.
struct InternalCheckFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : Error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
              ": " + msg),
        line(l),
        column(c) {}
};

struct ValidationError : Error {
  std::string block;
  ValidationError(const std::string& blk, const std::string& msg)
      : Error("validation error in block '" + blk + "': " + msg), block(blk) {}
};

inline void internal_check(bool cond, const char* what) {
  if (!cond) throw InternalCheckFailure(what);
}

}  // namespace catefs
