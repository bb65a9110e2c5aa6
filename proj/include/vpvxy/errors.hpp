#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpvxy {

enum class ErrorKind {
  ParseError,
  NonPositiveInput,
  NonIntegralExponent,
  NonIntegerValue,
  DegenerateParameters,
  NonPositiveParameter,
  NonRationalTuple,
  DomainViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Library error. `kind()` is the stable machine-readable tag surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::NonIntegerValue: return "NonIntegerValue";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::NonRationalTuple: return "NonRationalTuple";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace vpvxy
