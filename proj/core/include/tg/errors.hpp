#pragma once

#include <stdexcept>
#include <string>

namespace tg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A precondition on user-supplied values does not hold.
struct ValidationError : Error {
  using Error::Error;
};

/// A configurable resource cap (candidate count, state-hash memory) was hit.
struct CapacityError : Error {
  using Error::Error;
};

/// The requested method/objective/constraint combination is not provided.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace tg
