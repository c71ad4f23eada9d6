#pragma once

#include <stdexcept>
#include <string>

namespace hcm {

// Error categories surfaced by the library. The CLI maps these to exit
// codes: input/validation problems exit 2, iteration-cap overruns exit 3,
// eigensolver failures exit 4.
enum class ErrorKind {
  SubmodularityViolation,
  NegativePenalty,
  EmptySide,
  IsolatedNode,
  ConservationViolation,
  NotSaturating,
  UnbalancedSides,
  MissingDecomposition,
  InternalBoundExceeded,
  EigenNoConvergence,
  TooLarge,
  ZeroPenalty,
  InvalidInput,
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SubmodularityViolation: return "SubmodularityViolation";
    case ErrorKind::NegativePenalty: return "NegativePenalty";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::IsolatedNode: return "IsolatedNode";
    case ErrorKind::ConservationViolation: return "ConservationViolation";
    case ErrorKind::NotSaturating: return "NotSaturating";
    case ErrorKind::UnbalancedSides: return "UnbalancedSides";
    case ErrorKind::MissingDecomposition: return "MissingDecomposition";
    case ErrorKind::InternalBoundExceeded: return "InternalBoundExceeded";
    case ErrorKind::EigenNoConvergence: return "EigenNoConvergence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroPenalty: return "ZeroPenalty";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hcm
