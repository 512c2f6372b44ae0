#ifndef ROOTCOUNT_ERRORS_HPP
#define ROOTCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootcount {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-visible precondition was violated (CLI exit code 3).
struct PreconditionError : Error {
  using Error::Error;
};

/// The zero polynomial was passed where a nonzero one is required.
struct ZeroPolyError : PreconditionError {
  ZeroPolyError() : PreconditionError("ZeroPoly: operation requires a nonzero polynomial") {}
};

/// Polynomial division by the zero polynomial.
struct DivisionByZeroPolyError : PreconditionError {
  DivisionByZeroPolyError() : PreconditionError("DivisionByZeroPoly: polynomial division by zero") {}
};

/// gcd of two zero polynomials.
struct BothZeroError : PreconditionError {
  BothZeroError() : PreconditionError("BothZero: gcd requires at least one nonzero polynomial") {}
};

/// Interval endpoints out of order (requires a < b).
struct BadIntervalError : PreconditionError {
  BadIntervalError() : PreconditionError("BadInterval: interval endpoints must satisfy a < b") {}
};

/// A Sturm-style count was asked with a root at a finite endpoint.
struct RootAtEndpointError : PreconditionError {
  RootAtEndpointError() : PreconditionError("RootAtEndpoint: polynomial vanishes at an interval endpoint") {}
};

/// Half-plane direction must be nonzero.
struct ZeroDirectionError : PreconditionError {
  ZeroDirectionError() : PreconditionError("ZeroDirection: half-plane direction must be nonzero") {}
};

/// Malformed textual input (CLI exit code 2).
struct ParseError : Error {
  using Error::Error;
};

/// An internal invariant was breached; indicates a bug (CLI exit code 4).
struct InternalError : Error {
  using Error::Error;
};

/// A quantity that is provably nonnegative came out negative.
struct InternalNegativeError : InternalError {
  explicit InternalNegativeError(const std::string& what)
      : InternalError("InternalNegative: " + what) {}
};

/// A quantity that is provably even came out odd.
struct InternalParityError : InternalError {
  explicit InternalParityError(const std::string& what)
      : InternalError("InternalParity: " + what) {}
};

}  // namespace rootcount

#endif
