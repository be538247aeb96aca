#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvb {

enum class ErrorCode {
  ArityMismatch,
  UnknownVariable,
  VariableMismatch,
  ShapeMismatch,
  Singular,
  SingularMetric,
  BaseMismatch,
  FiberMismatch,
  NotInKernel,
  ProjectionMismatch,
  ParseError,
  InconsistentScenario,
  Unsupported,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dvb
