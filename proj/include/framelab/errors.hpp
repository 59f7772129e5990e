#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framelab {

// Inputs violate an operation's contract (mismatched domains, unknown
// modality names, malformed partitions, out-of-range worlds, ...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exhaustive check would exceed its configured budget. Callers are
// expected to shrink the instance; nothing in this library samples its
// way around a cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Formula syntax error; position is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

}  // namespace framelab
