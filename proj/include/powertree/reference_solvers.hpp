#pragma once

#include "powertree/instance.hpp"

namespace powertree {

enum class TreeMode { kSteiner, kSpanning };

inline constexpr int kExactNodeLimit = 12;
inline constexpr int kExactTerminalLimit = 12;

// Brute force: for every set of Steiner nodes, spanning trees of the induced
// subgraph on terminals plus those nodes are enumerated by include/exclude
// branching in edge-id order, pruned by a power lower bound (each node pays at
// least its current largest chosen edge, and an uncovered node at least its
// cheapest open edge). Only trees whose leaves are terminals are scored. Ties
// go to the lexicographically smallest sorted edge list. Spanning mode makes
// every node a terminal. Throws kGuardExceeded above 12 nodes.
PowerTree exact_min_power(const Instance& instance, TreeMode mode = TreeMode::kSteiner);

// Exact min-power Steiner tree by a subset dynamic program over terminal sets
// and per-node power thresholds: G[X](v, t) is the least power, excluding v's
// own, of a tree containing X and v in which v's edges cost at most the t-th
// distinct cost at v. Subtrees merge at v with a shared threshold and grow
// along an edge vw by paying max(c(vw), w's threshold) for w. Polynomial in
// the node count, exponential in the terminal count (guard: 12 terminals).
PowerTree exact_min_power_dp(const Instance& instance);

// Kruskal over the root's connected component, edges by (cost, id), then
// non-terminal leaves removed. Exactly the MST when every node is a terminal.
PowerTree min_spanning_tree(const Instance& instance);

// Exact min-cost Steiner tree (Dreyfus-Wagner; guard: 12 terminals).
PowerTree exact_min_cost_steiner(const Instance& instance);

// Min spanning tree of the terminals' shortest-path metric closure, expanded
// into graph paths, then reduced to a tree; at most twice the optimal cost.
PowerTree metric_closure_steiner(const Instance& instance);

// Spanning mode: min_spanning_tree. Steiner mode: exact min-cost tree when the
// terminal count permits, otherwise the metric-closure tree if allowed.
PowerTree baseline_min_cost(const Instance& instance, TreeMode mode, bool allow_fallback = true);

}  // namespace powertree
