#pragma once

#include <stdexcept>
#include <string>

namespace wtd {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, ideals, traces).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its domain
// (e.g. a non-tree where a tree is required, a mixed tree for cm_type).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeded its configured cap. Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal cross-check that a proven structural statement guarantees
// has failed. Seeing this means either a bug or a counterexample.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wtd
