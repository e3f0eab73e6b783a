#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minctrl {

/// A vertex id or matrix index outside [0, n).
class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed input file. line() is 1-based; 0 means the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotSquare : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive oracles refuse instances above their size cap.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime invariant of the augmentation algorithm failed. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minctrl
