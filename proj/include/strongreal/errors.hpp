#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strongreal {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidFieldError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct FieldMismatchError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

struct InvalidDegreeError : Error {
  using Error::Error;
};

struct TypeMismatchError : Error {
  using Error::Error;
};

struct NotAMemberError : Error {
  using Error::Error;
};

struct UnsupportedParameterError : Error {
  using Error::Error;
};

struct UnknownNameError : Error {
  using Error::Error;
};

// Closure hit the element cap; carries how many elements were found so far.
struct CapExceededError : Error {
  std::uint64_t partial_count;
  CapExceededError(const std::string& what, std::uint64_t partial)
      : Error(what), partial_count(partial) {}
};

// Text/file parse failure; carries the 1-based line number (0 = not line based).
struct ParseError : Error {
  std::size_t line;
  explicit ParseError(const std::string& what, std::size_t line_no = 0)
      : Error(what), line(line_no) {}
};

struct InvalidPermutationError : ParseError {
  using ParseError::ParseError;
};

}  // namespace strongreal
