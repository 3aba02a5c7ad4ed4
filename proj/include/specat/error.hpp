#pragma once

#include <stdexcept>
#include <string>

namespace specat {

enum class ErrorKind {
  type_mismatch,
  domain,
  precondition,
  parse,
  unknown_element,
  invalid_structure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Arrow endpoints do not chain, or parallel arrows are not parallel.
class TypeMismatch : public Error {
 public:
  explicit TypeMismatch(const std::string& what) : Error(ErrorKind::type_mismatch, what) {}
};

// Value outside the scalar domain, or an operation the domain lacks.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& what) : Error(ErrorKind::unknown_element, what) {}
};

// Lattice tables or lattice maps that violate their algebraic laws.
class InvalidStructure : public Error {
 public:
  explicit InvalidStructure(const std::string& what) : Error(ErrorKind::invalid_structure, what) {}
};

}  // namespace specat
