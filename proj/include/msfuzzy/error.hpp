#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msfuzzy {

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  NotBounded,
  NotDistributive,
  UnknownElement,
  EmptyGeneratingSet,
  EmptyW,
  SizeCapExceeded,
  CarrierMismatch,
  GradeOutOfRange,
  NotProper,
  MissingGradeStructure,
  UnknownProperty,
  HypothesisUnmet,
  SyntaxError,
  DuplicateElement,
  DanglingReference,
  IncompleteTable,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::EmptyGeneratingSet: return "EmptyGeneratingSet";
    case ErrorCode::EmptyW: return "EmptyW";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::MissingGradeStructure: return "MissingGradeStructure";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line()` is nonzero only for
/// diagnostics produced by the document parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0) out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace msfuzzy
