#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pencilform {

enum class ErrorKind {
  InvalidInput,
  ZeroInversion,
  ZeroInput,
  WrongCharacteristic,
  ZeroPolynomial,
  DegreeBoundExceeded,
  ZeroForm,
  SingularP,
  SizeMismatch,
  VanishingDiscriminant,
  SingularMatrix,
  CharTwo,
  Unsupported,
  NonUnit,
  SchemeMismatch,
  PreconditionViolated,
  ConventionFailure,
  LeadingCoefficientMismatch,
  CoefficientConventionViolated,
  ZeroPoint,
  NonRationalPoint,
  NotFree,
  InstanceTooLarge,
  BudgetExceeded,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroInversion: return "ZeroInversion";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::SingularP: return "SingularP";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::VanishingDiscriminant: return "VanishingDiscriminant";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::SchemeMismatch: return "SchemeMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ConventionFailure: return "ConventionFailure";
    case ErrorKind::LeadingCoefficientMismatch: return "LeadingCoefficientMismatch";
    case ErrorKind::CoefficientConventionViolated: return "CoefficientConventionViolated";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::NonRationalPoint: return "NonRationalPoint";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace pencilform
