#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powertree/rational.hpp"

namespace powertree {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Rational cost;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

struct Incidence {
  NodeId to;
  EdgeId edge;
};

// Undirected graph with nonnegative rational edge costs, a terminal set and a
// root terminal. Immutable once constructed; the constructor enforces every
// invariant and throws powertree::Error with a distinct code per violation.
class Instance {
 public:
  Instance(int node_count, std::vector<Edge> edges,
           std::vector<NodeId> terminals, NodeId root);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Sorted, duplicate free.
  const std::vector<NodeId>& terminals() const { return terminals_; }
  bool is_terminal(NodeId v) const { return is_terminal_[v]; }
  NodeId root() const { return root_; }

  const std::vector<Incidence>& incident(NodeId v) const { return adjacency_[v]; }
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  // Cost of e multiplied by scale(); exact.
  Units units(EdgeId e) const { return units_[e]; }
  std::int64_t scale() const { return scale_; }
  Rational to_cost(Units units) const { return Rational(units, scale_); }

  // Same topology, terminals and root; the listed edges get cost 0.
  Instance with_zeroed(std::span<const EdgeId> edges) const;
  // Same graph with a different terminal set.
  Instance with_terminals(std::vector<NodeId> terminals, NodeId root) const;
  // Same graph with every node a terminal; the root is kept.
  Instance as_spanning() const;

 private:
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<NodeId> terminals_;
  std::vector<char> is_terminal_;
  NodeId root_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Units> units_;
  std::int64_t scale_ = 1;
};

// A Steiner tree with its per-node powers and totals, in exact arithmetic.
struct PowerTree {
  std::vector<EdgeId> edges;  // sorted ascending
  std::map<NodeId, Rational> node_powers;
  Rational total_power;
  Rational total_cost;
};

// Evaluates an edge set that must be a tree containing every terminal.
// Throws kCyclicEdgeSet, kTerminalNotCovered or kDisconnectedEdgeSet.
PowerTree evaluate(const Instance& instance, std::span<const EdgeId> edges);

// Sum over nodes of the largest incident cost, in units. Defined for any edge
// set (not necessarily a tree).
Units power_units(const Instance& instance, std::span<const EdgeId> edges);
Units cost_units(const Instance& instance, std::span<const EdgeId> edges);

Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);
std::string serialize_instance(const Instance& instance);

// Each edge (u, v, c) becomes u-x (0), x-y (c/2), y-v (0) with fresh nodes x, y
// numbered above the original range; terminals and root are unchanged.
Instance reduce_cost_to_power(const Instance& instance);

}  // namespace powertree
