#include "u2quot/error.hpp"

namespace u2quot {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NonCircleLeftFactor: return "NonCircleLeftFactor";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::TrivialType: return "TrivialType";
    case ErrorCode::OrbitCountMismatch: return "OrbitCountMismatch";
    case ErrorCode::TableDisagreement: return "TableDisagreement";
    case ErrorCode::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::AmbiguousCandidate: return "AmbiguousCandidate";
    case ErrorCode::SnapFailure: return "SnapFailure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

std::string Error::describe() const {
  return module_ + ": " + std::string(error_code_name(code_)) + ": " + what();
}

}  // namespace u2quot
