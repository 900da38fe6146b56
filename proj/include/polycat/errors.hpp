#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value refers to something that does not exist (undeclared cell,
/// unknown generator, table entry outside a carrier).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for a dimension outside its domain.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A term or value is ill-typed: non-composable composite, sort mismatch.
class TypingError : public Error {
 public:
  using Error::Error;
};

/// A partial operation was used outside its specified domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The word problem is only decided up to dimension 2.
class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(std::size_t dim)
      : Error("unsupported dimension " + std::to_string(dim) +
              " (equality is decided for dimension <= 2 only)"),
        dim_(dim) {}
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polycat
