#pragma once

#include <stdexcept>
#include <string>

namespace matchgame {

// Caller-supplied data is invalid (bad file, violated precondition).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A text input could not be parsed; remembers the offending 1-based line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input exceeds the configured size bound of an exhaustive operation.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken: a bug in this library, never bad input.
[[noreturn]] inline void internal_panic(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}

inline void internal_check(bool ok, const char* what) {
  if (!ok) internal_panic(what);
}

}  // namespace matchgame
