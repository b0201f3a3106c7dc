#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folclass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (gcd(0,0), sqrt of a non-square, p != 2 where char 2 is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParametersError : public Error {
 public:
  using Error::Error;
};

class NotAFoliationError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string input, std::size_t position)
      : Error(message + " at position " + std::to_string(position) + " in '" + input + "'"),
        input_(std::move(input)),
        position_(position) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string input_;
  std::size_t position_;
};

}  // namespace folclass
