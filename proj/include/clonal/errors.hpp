#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clonal {

// Malformed text input. `offset` is the byte position where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An internal consistency check failed (e.g. the two equality decision paths
// disagree). Always a bug, never a user error.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two operands belong to different cloning systems.
class InstanceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace clonal
