#include "error.hpp"

namespace dvb {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::VariableMismatch: return "VARIABLE_MISMATCH";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::SingularMetric: return "SINGULAR_METRIC";
    case ErrorCode::BaseMismatch: return "BASE_MISMATCH";
    case ErrorCode::FiberMismatch: return "FIBER_MISMATCH";
    case ErrorCode::NotInKernel: return "NOT_IN_KERNEL";
    case ErrorCode::ProjectionMismatch: return "PROJECTION_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InconsistentScenario: return "INCONSISTENT_SCENARIO";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

}  // namespace dvb
