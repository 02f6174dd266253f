#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewinfo {

/// Failure categories raised by the library. The C API maps these one to one
/// onto skw_status values.
enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  NegativeEigenvalue,
  DimensionMismatch,
  BlochVectorTooLong,
  ParameterOutOfRange,
  NotUnitary,
  CompletenessViolation,
  AlphaOutOfRange,
  SingularState,
  EmptyList,
  RequiresTwoObservables,
  RequiresThreeObservables,
  RequiresTwoChannels,
  RequiresThreeChannels,
  SearchSpaceTooLarge,
  UnknownMetric,
  InvalidMetric,
  ConfigInvalid,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace skewinfo
