#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

// Malformed poset input: bad syntax or a duplicate bare declaration.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Relation set is not antisymmetric (a <= b <= a for distinct a, b).
struct CycleError : ParseError {
  explicit CycleError(const std::string& what) : ParseError(what) {}
};

// An enumeration or size budget was exceeded; callers degrade or abort.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hibi
