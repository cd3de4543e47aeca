#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace npival {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  ChainBroken,
  BadSatellite,
  BadIncidence,
  BadFlag,
  SemigroupOverflow,
  NotRealizable,
  DimensionMismatch,
  NotSatellite,
  NotATree,
  NotPseudoeffective,
  WrongSignCase,
  NegativePartOnEr,
  NotNPI,
  NotBig,
  NotNefBig,
  UndefinedQ,
  MinimalValuation,
  GenericityViolation,
  EtaNotNPI,
  VerificationFailed,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> diagnostics = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  ErrorCode code_;
  std::vector<std::string> diagnostics_;
};

}  // namespace npival
