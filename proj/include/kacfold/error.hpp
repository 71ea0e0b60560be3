#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kacfold {

enum class ErrorKind {
  VertexLoop,
  DanglingEndpoint,
  DuplicateId,
  NotPermutation,
  Incompatible,
  NotAdmissible,
  LatticeMismatch,
  NotFixed,
  UnknownVertex,
  ZeroVector,
  BudgetExceeded,
  NoNullRoot,
  NotUnfoldable,
  InvalidValuedQuiver,
  NotPrime,
  DegreeTooLarge,
  NotSubfield,
  FieldMismatch,
  QuiverMismatch,
  EndRingTooLarge,
  HomSpaceTooLarge,
  NotSink,
  NotSource,
  BadParameter,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VertexLoop: return "VertexLoop";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoNullRoot: return "NoNullRoot";
    case ErrorKind::NotUnfoldable: return "NotUnfoldable";
    case ErrorKind::InvalidValuedQuiver: return "InvalidValuedQuiver";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotSubfield: return "NotSubfield";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::EndRingTooLarge: return "EndRingTooLarge";
    case ErrorKind::HomSpaceTooLarge: return "HomSpaceTooLarge";
    case ErrorKind::NotSink: return "NotSink";
    case ErrorKind::NotSource: return "NotSource";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message names the offending
/// object; `kind()` is the machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kacfold
