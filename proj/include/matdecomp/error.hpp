#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matdecomp {

enum class ErrorCode {
  // field
  DivisionByZero,
  DescriptorMismatch,
  AlreadySquare,
  InvalidField,
  Parse,
  // linalg
  NotIdempotent,
  NotUpperTriangular,
  Singular,
  // subalg
  NotClosed,
  NotDirect,
  NotComplementary,
  UnitalS,
  UnitalM,
  BadCharacteristic,
  // autos
  SingularConjugator,
  DegenerateFamily,
  // fingerprint
  BudgetExceeded,
  SeparationFailure,
  TooManyVariables,
  DegreeTooHigh,
  // canonical
  UnitalContradiction,
  NotComplement,
  UnsupportedM,
  RequiresExtension,
  // rota
  ZeroWeight,
  // ffsearch
  UnexpectedLabel,
  // anything that signals a bug rather than bad input
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// True for codes that can only arise from an implementation defect.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

/// Internal-consistency assertion; violations are bugs, reported with ErrorCode::Internal.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::Internal, what);
}

}  // namespace matdecomp
