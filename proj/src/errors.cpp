#include "nichols/errors.hpp"

namespace nichols {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorKind::NotArithmetic: return "NotArithmetic";
    case ErrorKind::LikelyInfinite: return "LikelyInfinite";
    case ErrorKind::NotARootSystem: return "NotARootSystem";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::NonDegeneracyViolated: return "NonDegeneracyViolated";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::RecoveryMismatch: return "RecoveryMismatch";
    case ErrorKind::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorKind::ManinCheckFailed: return "ManinCheckFailed";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder:
    case ErrorKind::DimensionError:
    case ErrorKind::ParseError:
    case ErrorKind::UnsupportedParameters:
      return 1;
    case ErrorKind::NotArithmetic:
    case ErrorKind::LikelyInfinite:
    case ErrorKind::NotARootSystem:
    case ErrorKind::NotFiniteType:
      return 2;
    case ErrorKind::ConditionViolated:
    case ErrorKind::NonDegeneracyViolated:
    case ErrorKind::SearchFailed:
      return 3;
    case ErrorKind::InternalInvariantViolation:
    case ErrorKind::RecoveryMismatch:
    case ErrorKind::EmbeddingMismatch:
    case ErrorKind::ManinCheckFailed:
      return 4;
  }
  return 4;
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace nichols
