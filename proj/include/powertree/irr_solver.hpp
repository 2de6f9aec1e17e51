#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powertree/errors.hpp"
#include "powertree/instance.hpp"
#include "powertree/parallel.hpp"

namespace powertree {

struct IterationRecord {
  double lp_objective = 0;
  int lp_rounds = 0;
  std::vector<NodeId> terminals;  // sampled Q
  NodeId sink = 0;                // sampled s
  std::vector<EdgeId> edges;      // edges of the sampled component
  Rational component_power;       // under the costs current at sampling time
  int newly_zeroed = 0;
};

struct RunTrace {
  std::uint64_t seed = 0;
  int k = 0;
  std::vector<IterationRecord> iterations;
  Rational sampled_power_sum;
};

struct IrrResult {
  PowerTree tree;
  RunTrace trace;
};

// Raised when the iteration cap is hit; carries the partial trace.
class IterationCapError : public Error {
 public:
  IterationCapError(const std::string& message, RunTrace trace)
      : Error(ErrorCode::kIterationCap, message), trace_(std::move(trace)) {}
  const RunTrace& trace() const { return trace_; }

 private:
  RunTrace trace_;
};

// True iff the zero-cost edges connect all terminals.
bool zero_power_tree_exists(const Instance& instance);

// Reduces a connected edge set to a tree over the terminals: repeatedly drop
// the cycle edge whose removal lowers power the most (smallest id on ties),
// then strip non-terminal leaves. Evaluated under the instance's costs.
// Throws kDisconnectedEdgeSet if the edges do not connect the terminals.
PowerTree prune(const Instance& instance, std::span<const EdgeId> edges);

// Iterative randomized rounding. Each iteration rebuilds the k-columns and
// the LP on the current costs, draws one uniform number to pick a column with
// probability proportional to its LP value, zeroes that component's edges,
// and stops once the zero-cost edges connect the terminals. The answer is
// prune(sampled edges + originally free edges) under the original costs.
// Throws IterationCapError after max_iters iterations.
IrrResult irr_solve(const Instance& instance, int k, std::uint64_t seed, int max_iters,
                    Execution execution = Execution::kParallel, double tol = 1e-7);

}  // namespace powertree
