#include "divcert/error.hpp"

namespace divcert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::ZeroDivisorArgument: return "ZeroDivisorArgument";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotFoundBelowCap: return "NotFoundBelowCap";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::Syntax: return "Syntax";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace divcert
