#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfjhp {

/// Malformed textual input (quiver strings, permutations, intervals).
/// Carries the 0-based offset of the first offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An operation was called outside its precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration hit its configured cap.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tfjhp
