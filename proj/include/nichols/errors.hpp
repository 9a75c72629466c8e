#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

enum class ErrorKind {
  InvalidOrder,
  DimensionError,
  ParseError,
  UnsupportedParameters,
  NotArithmetic,
  LikelyInfinite,
  NotARootSystem,
  NotFiniteType,
  ConditionViolated,
  NonDegeneracyViolated,
  SearchFailed,
  InternalInvariantViolation,
  RecoveryMismatch,
  EmbeddingMismatch,
  ManinCheckFailed,
};

const char* to_string(ErrorKind kind);

// Process exit code for a failure of the given kind (see README).
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace nichols
