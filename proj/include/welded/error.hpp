#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace welded {

enum class ErrorCode {
  SyntaxError,
  UnpairedCrossing,
  RoleConflict,
  SignConflict,
  LengthMismatch,
  InvalidPermutation,
  NotApplicable,
  ReductionMismatch,
  ArityMismatch,
  EmptyInput,
  NotSquare,
  SizeOutOfRange,
  NonMonomialImage,
  TargetTooLarge,
  InvalidTarget,
  EmptyDiagram,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnpairedCrossing: return "UnpairedCrossing";
    case ErrorCode::RoleConflict: return "RoleConflict";
    case ErrorCode::SignConflict: return "SignConflict";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ReductionMismatch: return "ReductionMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::NonMonomialImage: return "NonMonomialImage";
    case ErrorCode::TargetTooLarge: return "TargetTooLarge";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so the CLI can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace welded
