#include "matdecomp/error.hpp"

namespace matdecomp {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::AlreadySquare: return "AlreadySquare";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotDirect: return "NotDirect";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::UnitalS: return "UnitalS";
    case ErrorCode::UnitalM: return "UnitalM";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::SingularConjugator: return "SingularConjugator";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SeparationFailure: return "SeparationFailure";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::UnitalContradiction: return "UnitalContradiction";
    case ErrorCode::NotComplement: return "NotComplement";
    case ErrorCode::UnsupportedM: return "UnsupportedM";
    case ErrorCode::RequiresExtension: return "RequiresExtension";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::UnexpectedLabel: return "UnexpectedLabel";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept { return code == ErrorCode::Internal; }

}  // namespace matdecomp
