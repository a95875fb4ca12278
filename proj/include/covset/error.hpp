#pragma once

#include <stdexcept>
#include <string>

namespace covset {

/// Broad failure categories. The CLI maps each one to a distinct exit code.
enum class ErrorKind {
  Syntax,           // malformed text input (.dg, DIMACS)
  Validation,       // well-formed input that violates a model invariant
  InvalidArgument,  // bad parameter for an operation
  Resource,         // size cap or search budget exceeded
  Internal,         // broken invariant inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying the 1-based line it was detected on.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Which budget dimension a resource error ran into.
enum class BudgetDimension { Alternatives, Subsets, WallTime };

class ResourceError : public Error {
 public:
  ResourceError(BudgetDimension dim, const std::string& what)
      : Error(ErrorKind::Resource, what), dim_(dim) {}

  BudgetDimension dimension() const noexcept { return dim_; }

 private:
  BudgetDimension dim_;
};

const char* to_string(BudgetDimension dim) noexcept;

}  // namespace covset
