#pragma once

#include <stdexcept>
#include <string>

namespace triplication {

enum class ErrorCode {
  InvalidInput,
  OrderTooLarge,
  NotATable,
  InputNotStrongStarter,
  SpecialPairViolation,
  InconsistentOrdering,
  KeyNotAdmissible,
  MultiplierNotInvertible,
  IncompatibleResidues,
  ScenarioMismatch,
  NotCongruous,
  InternalVerificationFailure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace triplication
