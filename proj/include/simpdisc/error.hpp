#pragma once

#include <stdexcept>
#include <string>

namespace simpdisc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a document or argument violates a type invariant.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Composition of maps whose (co)domains do not line up.
class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A combinatorial search or enumeration hit its configured cap.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Non-exact arithmetic produced an inconsistent rank decision.
class NumericInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace simpdisc
