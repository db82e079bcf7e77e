#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracalc {

/// Argument outside the mathematical domain of an operation (ln of a
/// non-positive number, x <= 0 for an operator anchored at 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Failure to parse an operand expression. offset() is the byte offset into
/// the source text where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : ParseError("unknown identifier `" + name + "`", offset), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A non-finite value appeared where a finite one is required. index() is the
/// series term or Taylor coefficient that went bad.
class ArithmeticError : public std::runtime_error {
 public:
  ArithmeticError(const std::string& what, std::size_t index)
      : std::runtime_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fracalc
