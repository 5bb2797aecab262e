#pragma once

#include <stdexcept>
#include <string>

namespace glattice {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured or hard size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Cohomological degree outside the supported range.
class UnsupportedDegreeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed group spec, lattice expression or morphism name.
class ExpressionError : public Error {
 public:
  using Error::Error;
};

/// The group has no registered presentation.
class UnsupportedPresentationError : public Error {
 public:
  using Error::Error;
};

/// A subgroup is not contained in the group it is paired with.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Consecutive morphisms in a sequence do not compose.
class CompositionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Morphisms of a diagram do not fit its shape.
class DiagramError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A constructed object failed its own invariant check. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace glattice
