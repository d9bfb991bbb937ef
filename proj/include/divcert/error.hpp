#pragma once

#include <stdexcept>
#include <string>

namespace divcert {

enum class ErrorKind {
  DegreeTooLow,
  VariableClash,
  ZeroDivisorArgument,
  NotHomogeneous,
  NotMinimal,
  InvalidParameter,
  InsufficientData,
  NotInIdeal,
  NotFoundBelowCap,
  RingMismatch,
  UnitIdeal,
  InvalidInstance,
  Syntax,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace divcert
