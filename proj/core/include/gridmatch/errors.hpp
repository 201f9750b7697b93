#pragma once

#include <stdexcept>

namespace gridmatch {

/// Text input (graph files, certificates, term files) does not follow its grammar.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its arguments.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound (vertex count, width, power cap) was exceeded.
struct BoundExceeded : std::length_error {
  using std::length_error::length_error;
};

/// An internal invariant failed. Seeing one of these means a bug, not bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gridmatch
