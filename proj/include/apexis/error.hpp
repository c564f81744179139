#pragma once

#include <stdexcept>
#include <string>

namespace apexis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex count outside 0..32, or a combined result that would exceed it.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (unknown vertex, bad l, n < 6 ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural precondition violated (degree != 2 for smoothing, not a triangle ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Search or state-sum budget exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace apexis
