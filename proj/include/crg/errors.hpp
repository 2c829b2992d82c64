#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Grammar-level failure; `position` is the byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Structurally valid input that violates a named invariant.
class ConstraintError : public Error {
public:
  using Error::Error;
};

// Enumeration refused: the group is larger than the configured cap.
class CapError : public Error {
public:
  CapError(const std::string& msg, std::uint64_t refused_order)
      : Error(msg), refused_order_(refused_order) {}

  std::uint64_t refused_order() const { return refused_order_; }

private:
  std::uint64_t refused_order_;
};

}  // namespace crg
