#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fptlct {

enum class ErrorKind {
  Domain,
  Overflow,
  Capacity,
  Parse,
  Invariant,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

// A prime at which an integer model loses all of its generators.
class DegenerateReductionError : public DomainError {
 public:
  explicit DegenerateReductionError(const std::string& what) : DomainError(what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

// A configured resource cap was hit. Never accompanied by a partial answer.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::Capacity, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, what + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A mathematical invariant that must hold failed at runtime.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::Invariant, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace fptlct
