#pragma once

#include <stdexcept>
#include <string>

namespace planedec {

/// Base of every error thrown by this library. Catching this is enough to
/// map any failure to a diagnostic; subclasses exist so callers can react
/// to invalid input differently from internal invariant violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic or comparison mixed an exact value with a floating one.
struct ModeMismatch : Error {
  using Error::Error;
};

/// A mass was negative where only nonnegative mass is meaningful.
struct NegativeMass : Error {
  using Error::Error;
};

/// Atom masses do not sum to one (within tolerance in float mode).
struct TotalMassNotOne : Error {
  using Error::Error;
};

/// An operation that requires barycenter zero was given something else.
struct NonZeroMean : Error {
  using Error::Error;
};

/// Two points expected to span opposite rays from the origin do not.
struct NotAntipodal : Error {
  using Error::Error;
};

/// A triple that must contain the origin in its convex hull does not.
struct NotContaining : Error {
  using Error::Error;
};

/// The origin appeared where a nonzero point or direction is required.
struct ZeroPoint : Error {
  using Error::Error;
};

/// Support was expected to lie on a single line through the origin.
struct NotOnLine : Error {
  using Error::Error;
};

/// The two factorized halves of a boundary evaluation disagree.
/// This cannot happen for valid zero-mean input; seeing it means the
/// input slipped past validation or the arithmetic mode lost too much.
struct FactorizationMismatch : Error {
  using Error::Error;
};

/// A quantity the mathematics guarantees (weights summing to one, a
/// positive invariant on planar support) failed to hold. Always a bug
/// or unusable input, never a condition for the caller to handle.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Malformed textual input; the message carries the offending location.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace planedec
