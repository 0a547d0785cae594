#pragma once

#include <stdexcept>
#include <string>

namespace toricq {

/// Raised when an input violates an operation's precondition (bad dimension,
/// non-interior origin, zero state, ...). Callers can surface the message.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails. Indicates a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace toricq
