#include "skewinfo/errors.hpp"

namespace skewinfo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BlochVectorTooLong: return "BlochVectorTooLong";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::CompletenessViolation: return "CompletenessViolation";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::SingularState: return "SingularState";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::RequiresTwoObservables: return "RequiresTwoObservables";
    case ErrorCode::RequiresThreeObservables: return "RequiresThreeObservables";
    case ErrorCode::RequiresTwoChannels: return "RequiresTwoChannels";
    case ErrorCode::RequiresThreeChannels: return "RequiresThreeChannels";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace skewinfo
