#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace branchcones {

/// Precondition on caller-supplied data violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Valid input that this library does not handle (non-type-A trails, non-trivalent trees).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A slice whose free coordinates are not all bounded.
class UnboundedRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration or elimination exceeded a configured limit.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// A BZ filling violating a hexagon condition or non-negativity.
class InvalidFilling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency check failed (e.g. an oracle disagreement under --verify).
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace branchcones
