#pragma once

#include <stdexcept>
#include <string>

namespace jetvar {

// exit code 1 in the CLI
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderCapError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class FamilyMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// exit code 2
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// exit code 3
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jetvar
