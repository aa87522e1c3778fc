#pragma once

#include <stdexcept>
#include <string>

namespace arc {

/// Bad input data: malformed embedding lines, corrupt index files, unknown
/// query labels. Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant (non-exact division in the counts
/// recurrence, an empty subtree during a sampler walk). Always a bug in the
/// index structures, never a user error. Maps to CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace arc
