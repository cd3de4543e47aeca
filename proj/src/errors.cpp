#include "npival/errors.hpp"

namespace npival {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ChainBroken: return "ChainBroken";
    case ErrorCode::BadSatellite: return "BadSatellite";
    case ErrorCode::BadIncidence: return "BadIncidence";
    case ErrorCode::BadFlag: return "BadFlag";
    case ErrorCode::SemigroupOverflow: return "SemigroupOverflow";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSatellite: return "NotSatellite";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotPseudoeffective: return "NotPseudoeffective";
    case ErrorCode::WrongSignCase: return "WrongSignCase";
    case ErrorCode::NegativePartOnEr: return "NegativePartOnEr";
    case ErrorCode::NotNPI: return "NotNPI";
    case ErrorCode::NotBig: return "NotBig";
    case ErrorCode::NotNefBig: return "NotNefBig";
    case ErrorCode::UndefinedQ: return "UndefinedQ";
    case ErrorCode::MinimalValuation: return "MinimalValuation";
    case ErrorCode::GenericityViolation: return "GenericityViolation";
    case ErrorCode::EtaNotNPI: return "EtaNotNPI";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> diagnostics)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace npival
