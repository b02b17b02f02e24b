#include "spexlab/error.hpp"

namespace spexlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateOrder: return "DegenerateOrder";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace spexlab
