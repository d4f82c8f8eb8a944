#pragma once

#include <stdexcept>
#include <string>

namespace symspine {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (out-of-range level, mismatched
/// truncation, malformed table, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A serialized document could not be parsed or failed schema checks.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A combinatorial search exceeded its configured node budget.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An input lacks a structural property an operation needs (e.g. a
/// simplicial set that is not edgy, or a diagram arrow that is not a map).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace symspine
