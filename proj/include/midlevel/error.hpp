#pragma once

#include <stdexcept>
#include <string>

namespace midlevel {

/// Raised when a request exceeds the configured size bound (e.g. k too large).
class CapacityError : public std::out_of_range {
 public:
  explicit CapacityError(const std::string& what) : std::out_of_range(what) {}
};

/// Raised for malformed input or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace midlevel
