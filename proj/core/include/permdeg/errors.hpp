#pragma once

#include <stdexcept>

namespace permdeg {

/// An enumeration or search ran past its class or time budget. Callers
/// rerun with a larger budget; partial results are never returned.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a group is too large for an exhaustive routine.
class OrderCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace permdeg
