#pragma once

#include <stdexcept>
#include <string>

namespace scsort {

// Malformed or out-of-range arguments: bad permutation text, duplicate
// entries, unknown pattern, positions outside 1..n.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration refused because the factorial search space exceeds the guard.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scsort
