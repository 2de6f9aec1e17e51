#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powertree {

enum class ErrorCode {
  kMalformedLine,
  kDuplicateEdge,
  kSelfLoop,
  kRootNotTerminal,
  kNodeOutOfRange,
  kDisconnectedTerminals,
  kMissingDirective,
  kNegativeCost,
  kCyclicEdgeSet,
  kTerminalNotCovered,
  kDisconnectedEdgeSet,
  kUnreachable,
  kInvalidArgument,
  kGuardExceeded,
  kInfeasible,
  kIterationCap,
  kNumericOverflow,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a stable code so the CLI can
// emit a machine-readable record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace powertree
