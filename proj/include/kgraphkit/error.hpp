#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraphkit {

enum class ErrorKind {
  MissingSquare,
  DuplicateSquare,
  MalformedSquare,
  AssociativityViolation,
  DanglingReference,
  DuplicateId,
  BadColor,
  TooLarge,
  NotComposable,
  BadDegree,
  UnknownVertex,
  OutOfRange,
  MalformedPresentation,
  InvalidElement,
  NotHereditary,
  PreconditionViolated,
  NotNested,
  BudgetExceeded,
  EmptyInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kgraphkit
