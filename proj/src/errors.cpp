#include "lieb/errors.hpp"

namespace lieb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::DivergentTail: return "DivergentTail";
    case ErrorCode::ScreenRejected: return "ScreenRejected";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace lieb
