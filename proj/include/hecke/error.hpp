#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorCode {
  InvalidConfig,
  InvalidBase,
  EllipticInput,
  ParseError,
  BudgetExceeded,
  NoDominantRoot,
  ConvergenceFailure,
  SingularSystem,
  VerificationMismatch,
};

std::string_view to_string(ErrorCode code);

/// Typed failure raised by every module; the CLI maps `code()` to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hecke
