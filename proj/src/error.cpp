#include "hecke/error.hpp"

namespace hecke {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::InvalidBase: return "INVALID_BASE";
    case ErrorCode::EllipticInput: return "ELLIPTIC_INPUT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::NoDominantRoot: return "NO_DOMINANT_ROOT";
    case ErrorCode::ConvergenceFailure: return "CONVERGENCE_FAILURE";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::VerificationMismatch: return "VERIFICATION_MISMATCH";
  }
  return "UNKNOWN";
}

}  // namespace hecke
