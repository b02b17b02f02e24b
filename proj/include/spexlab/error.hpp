#pragma once

#include <stdexcept>
#include <string>

namespace spexlab {

enum class ErrorKind {
  InvalidParameter,
  CapacityExceeded,
  MalformedGraph6,
  ConvergenceFailure,
  DimensionMismatch,
  ZeroVector,
  DegenerateOrder,
  InvalidDistribution,
  OrderMismatch,
  DisconnectedInput,
  InvalidQuery,
  InvalidEpsilon,
  EmptyFeasibleSet,
  InternalAssertion,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// the CLI can map it onto an exit code.
class SpexError : public std::runtime_error {
 public:
  SpexError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace spexlab
