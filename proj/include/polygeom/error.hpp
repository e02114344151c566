#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polygeom {

enum class ErrorKind {
  InvalidIndex,
  InvalidDegree,
  DegreeTooLarge,
  InvalidInput,
  NonConvergence,
  HypothesisViolated,
  TheoremViolation,
  DegenerateDiagonal,
  InvalidInstance,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

// Base of everything the library throws. The kind lets the CLI map failures
// onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polygeom
