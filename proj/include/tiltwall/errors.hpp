#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

/// Malformed textual input (classes, rationals, command arguments).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request whose answer is "nothing exists": a vacuous
/// Chern character range, a probe on the vertical wall, an empty wall.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The class admits no semistable object at all (e.g. c = 0, d > 0 for rank two).
class NoSemistableClass : public DomainError {
 public:
  explicit NoSemistableClass(const std::string& what)
      : DomainError("no semistable class: " + what) {}
};

/// Recursive search exceeded its configured limits.
class UnsupportedRange : public std::runtime_error {
 public:
  explicit UnsupportedRange(const std::string& what)
      : std::runtime_error("unsupported range: " + what) {}
};

}  // namespace tiltwall
