#pragma once

#include <stdexcept>
#include <string>

namespace floq {

/// Base class for every error thrown by this library.
struct FloqError : std::runtime_error {
  explicit FloqError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Band touching: |h| fell at or below the degeneracy threshold, the
/// eigenbasis is undefined there.
struct DegenerateError : FloqError {
  using FloqError::FloqError;
};

/// Input Bloch vectors violate the declared chiral-class constraint,
/// or a chiral-only routine was handed a non-chiral model.
struct ClassMismatchError : FloqError {
  using FloqError::FloqError;
};

/// Operation undefined exactly on a phase boundary.
struct CriticalPointError : FloqError {
  using FloqError::FloqError;
};

/// A filling-grid momentum hit a band touching; retry with an offset grid.
struct GridError : FloqError {
  using FloqError::FloqError;
};

struct SizeError : FloqError {
  using FloqError::FloqError;
};

struct RangeError : FloqError {
  using FloqError::FloqError;
};

/// Renyi order lambda=1 is the von Neumann limit, use the vn routine.
struct LambdaError : FloqError {
  using FloqError::FloqError;
};

struct WindowError : FloqError {
  using FloqError::FloqError;
};

/// Sweep abscissae are not uniformly spaced.
struct SpacingError : FloqError {
  using FloqError::FloqError;
};

struct InsufficientDataError : FloqError {
  using FloqError::FloqError;
};

struct UnknownModelError : FloqError {
  using FloqError::FloqError;
};

/// Command-line misuse; maps to exit code 1.
struct UsageError : FloqError {
  using FloqError::FloqError;
};

}  // namespace floq
