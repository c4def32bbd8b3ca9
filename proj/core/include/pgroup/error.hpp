#pragma once

#include <stdexcept>
#include <string>

namespace pgroup {

enum class ErrorCode {
  NotPGroup,
  NotAbelian,
  NotNormal,
  NotCentral,
  NotNilpotent,
  IncompatibleIdentification,
  InconsistentPresentation,
  SizeCapExceeded,
  SearchBudgetExceeded,
  ParameterViolation,
  EvenPrime,
  WrongClass,
  NotCaminaType,
  PrecondFailed,
  NotStronglySkew,
  OddDimension,
  MixedPrimes,
  ConditionsNotMet,
  SyntaxError,
  UnknownGenerator,
  ExponentOutOfRange,
  DuplicateRelation,
  FileNotFound,
  InternalCheckFailed,
};

/// Stable machine-readable name, e.g. "FILE_NOT_FOUND".
const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace pgroup
