#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uncomp {

// Malformed textual input.  `location` is a 1-based line (assembly,
// family files) or 0-based character offset (expressions).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : std::runtime_error(what), location_(location) {}
  std::size_t location() const { return location_; }

 private:
  std::size_t location_;
};

// A well-formed request whose preconditions do not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uncomp
