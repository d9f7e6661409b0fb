#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boxball {

/// Malformed text input. `position` is a 1-based character or token index.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value left the domain an operation is defined on (negative whurl output,
/// a τ second difference outside {0,1}, a rigged configuration outside the
/// image of Φ, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInImageError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative procedure exceeded its configured cap.
class IterationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boxball
