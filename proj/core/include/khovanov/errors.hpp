#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kh {

/// Malformed textual input (PD code, braid word, polynomial, table line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that an operation cannot accept (a link where a knot is
/// required, an out-of-range state, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram exceeds the configured crossing limit for cube construction.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed (d∘d ≠ 0, inexact Euler characteristic
/// division, disagreeing determinant routes). Always a bug, never data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kh
