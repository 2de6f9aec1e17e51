#include "powertree/errors.hpp"

namespace powertree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "malformed_line";
    case ErrorCode::kDuplicateEdge: return "duplicate_edge";
    case ErrorCode::kSelfLoop: return "self_loop";
    case ErrorCode::kRootNotTerminal: return "root_not_terminal";
    case ErrorCode::kNodeOutOfRange: return "node_out_of_range";
    case ErrorCode::kDisconnectedTerminals: return "disconnected_terminals";
    case ErrorCode::kMissingDirective: return "missing_directive";
    case ErrorCode::kNegativeCost: return "negative_cost";
    case ErrorCode::kCyclicEdgeSet: return "cyclic_edge_set";
    case ErrorCode::kTerminalNotCovered: return "terminal_not_covered";
    case ErrorCode::kDisconnectedEdgeSet: return "disconnected_edge_set";
    case ErrorCode::kUnreachable: return "unreachable";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kGuardExceeded: return "guard_exceeded";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kIterationCap: return "iteration_cap";
    case ErrorCode::kNumericOverflow: return "numeric_overflow";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace powertree
