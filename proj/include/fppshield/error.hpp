#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fppshield {

enum class ErrorCode {
  CycleDetected,
  IndexOutOfRange,
  NotACoverEdge,
  NotCritical,
  PreconditionViolated,
  ResourceLimit,
  InvalidParameter,
  SyntaxError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code tells callers (the CLI in particular) how to classify the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace fppshield
