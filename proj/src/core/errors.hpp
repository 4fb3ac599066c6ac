#pragma once

#include <stdexcept>

namespace svmflow {

/// Bad user input: invalid arguments, malformed files, infeasible configs.
class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable path, ...).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown: non-finite states, singular systems, step underflow.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace svmflow
