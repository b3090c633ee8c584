#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taufact {

enum class ErrorCode {
  ParseError,
  NonMonicDivisor,
  ZeroElement,
  ZeroOrUnitInput,
  UnsupportedDegree,
  NotPrime,
  RingMismatch,
  NonMonicGenerator,
  InfiniteQuotient,
  NotOrderFour,
  BudgetExceeded,
  WrongIsoClass,
  InconsistentCensus,
  InternalCheckFailed,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code. `detail` is the free-text
// part without the code prefix, for structured rendering.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace taufact
