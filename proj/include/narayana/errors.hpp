#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

/// Bad user input: malformed paths, words, parking functions, out-of-range
/// parameters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction broke one of its own invariants. Indicates a bug, not bad
/// input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace narayana
