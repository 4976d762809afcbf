#pragma once

#include <stdexcept>
#include <string>

namespace levelcomplex {

/// Malformed user input: bad shapes, permutation files, unknown cells.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A computation was refused because it exceeds a configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levelcomplex
