#pragma once

#include <stdexcept>
#include <string>

namespace noodle {

/// Thrown when an enumeration or search exceeds its configured cap,
/// or when a required enumeration cache is unavailable.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input violates a structural invariant (e.g. a crossing
/// matching where a non-crossing one is required).
class InvariantError : public std::invalid_argument {
 public:
  explicit InvariantError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace noodle
