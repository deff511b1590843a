#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

enum class ErrorKind {
  MalformedLine,
  EdgeLabelCountNotTwo,
  DisconnectedCycleInconsistency,
  InvalidWidth,
  IncompleteState,
  TooManyCrossings,
  IndexOutOfRange,
  WidthMismatch,
  NegativeIndex,
  DivisionByZero,
  MorseizationFailed,
  WidthOverflow,
  NotLaurentAfterClearing,
  ZeroPolynomial,
  EvaluationLimit,
  NotStabilized,
  DiagramIsAdequate,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::EdgeLabelCountNotTwo: return "EdgeLabelCountNotTwo";
    case ErrorKind::DisconnectedCycleInconsistency: return "DisconnectedCycleInconsistency";
    case ErrorKind::InvalidWidth: return "InvalidWidth";
    case ErrorKind::IncompleteState: return "IncompleteState";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::NegativeIndex: return "NegativeIndex";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MorseizationFailed: return "MorseizationFailed";
    case ErrorKind::WidthOverflow: return "WidthOverflow";
    case ErrorKind::NotLaurentAfterClearing: return "NotLaurentAfterClearing";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::EvaluationLimit: return "EvaluationLimit";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::DiagramIsAdequate: return "DiagramIsAdequate";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skein
