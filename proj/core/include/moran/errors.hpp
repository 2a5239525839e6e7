#pragma once

#include <stdexcept>
#include <string>

namespace moran {

// Malformed configuration text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Well-formed text describing an impossible object (p <= 1, empty or
// duplicate digits, ...).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs a (T1)-(T3) level received an inadmissible one.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two atoms (or two spectrum points) coincided where the construction
// requires them to be distinct.
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A system file could not be read.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moran
