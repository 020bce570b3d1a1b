#pragma once

#include <stdexcept>
#include <string>

namespace corrhier {

// Malformed textual input (Pauli strings, edge lists, graph6 lines).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration limit would be exceeded.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int limit)
      : std::runtime_error(what), limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

}  // namespace corrhier
