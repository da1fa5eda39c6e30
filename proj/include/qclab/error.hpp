#pragma once

#include <stdexcept>
#include <string>

namespace qclab {

/// Bad input: malformed text, violated precondition, resource guard hit.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A property that must hold by construction failed. Indicates a bug, or a
/// falsified mathematical claim, never a usage error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace qclab
