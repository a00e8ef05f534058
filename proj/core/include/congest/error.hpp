#pragma once

#include <stdexcept>
#include <string>

namespace congest {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (unknown edge, matched root, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The simulated network rejected a message or a phase ended inconsistently.
class SimulationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle was asked to handle an instance above its size cap.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace congest
