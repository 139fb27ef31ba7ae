// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace vecgo {

enum class ErrorCode {
  DivisionByZero,
  NotAssociative,
  NoIdentity,
  NoInverse,
  InvalidAction,
  EnumerationBoundExceeded,
  DegreeMismatch,
  NotNormalizable,
  CarrierNotCosetSpace,
  NotNormalized,
  NotCocycle,
  NotHomomorphism,
  NotSpherical,
  UndefinedLabels,
  NotTransitive,
  ShapeMismatch,
  NotEquivariant,
  LambdaConditionFailed,
  SourceTargetMismatch,
  NotCyclic,
  NoTrace,
  IndexOutOfRange,
  ParseError,
  ValidationError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::CarrierNotCosetSpace: return "CarrierNotCosetSpace";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::UndefinedLabels: return "UndefinedLabels";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::LambdaConditionFailed: return "LambdaConditionFailed";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NoTrace: return "NoTrace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace vecgo
