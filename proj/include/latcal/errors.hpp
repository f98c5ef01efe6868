#pragma once

#include <stdexcept>
#include <string>

namespace latcal {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotComparableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotLatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDistributiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingSeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LatticeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownDemoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace latcal
