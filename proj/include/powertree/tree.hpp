#pragma once

#include <span>
#include <vector>

#include "powertree/instance.hpp"
#include "powertree/rng.hpp"

namespace powertree {

struct TreeEdge {
  NodeId u = 0;
  NodeId v = 0;
  Units cost = 0;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

// A standalone weighted tree with terminal flags, the input of the
// decomposition and witness procedures. Node ids need not be dense: nodes
// without incident edges that are not terminals are simply absent.
class Tree {
 public:
  Tree(int node_count, std::vector<TreeEdge> edges, std::vector<NodeId> terminals,
       std::int64_t scale = 1);

  // Tree formed by the given instance edges; keeps node ids and costs.
  static Tree from_instance(const Instance& instance, std::span<const EdgeId> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(int e) const { return edges_[e]; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  bool is_terminal(NodeId v) const { return is_terminal_[v]; }
  const std::vector<Incidence>& incident(NodeId v) const { return adjacency_[v]; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }
  bool contains(NodeId v) const { return degree(v) > 0 || is_terminal_[v]; }
  std::int64_t scale() const { return scale_; }
  Rational to_cost(Units units) const { return Rational(units, scale_); }

  // Leaves are exactly the terminals.
  bool is_full_component() const;
  Units power() const;
  Units cost() const;

 private:
  int node_count_;
  std::vector<TreeEdge> edges_;
  std::vector<NodeId> terminals_;
  std::vector<char> is_terminal_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::int64_t scale_;
};

// Power (sum over nodes of the max incident cost) of a subset of tree edges.
Units subtree_power(const Tree& tree, std::span<const int> edges);
Units subtree_cost(const Tree& tree, std::span<const int> edges);
// Sorted terminals touched by the edge subset.
std::vector<NodeId> subtree_terminals(const Tree& tree, std::span<const int> edges);

// Random full component: every internal node has degree in
// [min_degree, max_degree] (min_degree >= 3), leaves are terminals, costs are
// integers in [1, max_cost]. Node ids are shuffled.
Tree random_full_component(Rng& rng, int min_leaves, int min_degree, int max_degree,
                           int max_cost);

// Random labelled tree on `nodes` nodes with rational costs p/q, p in
// [0, 30], q in [1, 6]; every node is a terminal.
Instance random_tree_instance(Rng& rng, int nodes);

}  // namespace powertree
