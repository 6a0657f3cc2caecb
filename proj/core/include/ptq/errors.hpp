#pragma once

#include <stdexcept>
#include <string>

namespace ptq {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The linear system for a commutator equation is inconsistent within the
/// given ansatz bounds; the caller should enlarge the ansatz.
struct NoSolutionInAnsatz : Error {
  explicit NoSolutionInAnsatz(const std::string& msg, int failing_order = 0)
      : Error(msg), order(failing_order) {}
  int order;  // hierarchy order that failed, 0 if not applicable
};

/// A conjugation series did not terminate within the term budget, so the
/// result cannot be certified exact.
struct TruncatedSeries : Error {
  using Error::Error;
};

/// An iterative solver hit its resolution cap before the requested tolerance.
struct NotConverged : Error {
  using Error::Error;
};

/// Finite-difference box too small: eigenfunction mass at the boundary, or
/// the potential at the walls does not dominate the requested eigenvalues.
struct BoxTooSmall : Error {
  using Error::Error;
};

/// No Wronskian root inside the supplied energy bracket.
struct NoRootInBracket : Error {
  using Error::Error;
};

/// Adaptive step control underflowed during ODE integration.
struct StiffnessFailure : Error {
  using Error::Error;
};

/// A Wronskian minimum was found but its normalized residual stays above
/// the certification tolerance.
struct ResidualAboveTolerance : Error {
  using Error::Error;
};

/// Two eigenvalue lists are too short for the requested comparison.
struct LengthMismatch : Error {
  using Error::Error;
};

}  // namespace ptq
