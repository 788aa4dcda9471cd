#include "singcoh/error.hpp"

namespace singcoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Verification: return "verification_failed";
    case ErrorCode::Numerical: return "numerical_error";
  }
  return "unknown";
}

}  // namespace singcoh
