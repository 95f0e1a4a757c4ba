#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace u2quot {

enum class ErrorCode {
  InvalidParameters,
  NonCircleLeftFactor,
  BothZero,
  ClosureOverflow,
  NotCoprime,
  TrivialType,
  OrbitCountMismatch,
  TableDisagreement,
  CrossCheckFailure,
  MalformedGraph,
  NoCandidate,
  AmbiguousCandidate,
  SnapFailure,
  IoError,
  ConfigError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures carry the module that raised them so reports can name
// the origin of a failed computation.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string module, const std::string& what)
      : std::runtime_error(what), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

  // "module: Kind: message"
  std::string describe() const;

private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace u2quot
