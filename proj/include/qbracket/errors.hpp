#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbracket {

// Malformed text input. `position` is the 0-based character offset where
// parsing failed.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::invalid_argument(what + " (at position " +
                              std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A structurally valid input that violates a semantic rule (arc labels,
// orientation, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a configured size cap (state enumeration, strand count,
// polynomial term count).
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qbracket
