#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace promptpricing {

enum class ErrorCode {
  InvalidModel,
  InvalidModelSet,
  InvalidPrice,
  SchedulePriceMissing,
  InvalidAmbiguity,
  InvalidDistribution,
  InvalidQuadrature,
  NonFiniteValue,
  NoBracket,
  UnboundedDemand,
  ConfigError,
  DegenerateCostBase,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of the numerics rather than of the inputs.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::NonFiniteValue || code_ == ErrorCode::NoBracket ||
           code_ == ErrorCode::UnboundedDemand;
  }

 private:
  ErrorCode code_;
};

}  // namespace promptpricing
