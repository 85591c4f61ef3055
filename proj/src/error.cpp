#include "kgraphkit/error.hpp"

namespace kgraphkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingSquare: return "MissingSquare";
    case ErrorKind::DuplicateSquare: return "DuplicateSquare";
    case ErrorKind::MalformedSquare: return "MalformedSquare";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::BadColor: return "BadColor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MalformedPresentation: return "MalformedPresentation";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace kgraphkit
