#pragma once

#include <optional>
#include <span>
#include <vector>

#include "powertree/tree.hpp"

namespace powertree {

// One component of a decomposition: a subtree of the source tree given by
// edge indices, with the source terminals it touches.
struct Part {
  std::vector<int> edges;          // sorted
  std::vector<NodeId> terminals;   // sorted
  Units power = 0;
};

struct Decomposition {
  Tree source;
  std::vector<Part> parts;
  Units total_power = 0;
};

Part make_part(const Tree& tree, std::vector<int> edges);
Decomposition make_decomposition(const Tree& tree, std::vector<std::vector<int>> part_edges);

// Largest degree of any node inside the part's own edges.
int max_part_degree(const Tree& tree, const Part& part);
// Degree of v counted over the part's edges.
int part_degree(const Tree& tree, const Part& part, NodeId v);

struct DummyLeaves {
  Tree tree;                     // original edges keep their indices
  int original_edge_count = 0;
  std::vector<NodeId> original_of;  // node id -> node of the source tree
};

// Every terminal t gets a fresh pendant leaf t' (ids n, n+1, ... in terminal
// order) joined by a cost-0 edge; the pendants become the terminal set, so
// the result is one full component. Throws kInvalidArgument if the tree has a
// leaf that is not a terminal.
DummyLeaves attach_dummy_leaves(const Tree& tree);

// Maps a decomposition of the padded tree back onto the original tree by
// dropping the pendant edges; part powers are unchanged.
Decomposition contract_dummy_leaves(const DummyLeaves& padded, const Tree& original,
                                    const Decomposition& decomposition);

// Splits a full component into parts of maximum degree <= delta. Rooted at the
// smallest-id leaf; the split node is the smallest-id node of degree >
// delta whose descendants all have degree <= delta. Its children, ordered by
// (edge cost, id), are grouped ceil(delta/2) at a time until at most delta-2
// remain; each group with its subtrees becomes a part, and the next part
// receives the cheapest descending leaf path of the group (minimising path
// power minus the first edge). Parts are listed in creation order with the
// remaining root part last.
Decomposition bounded_degree_decompose(const Tree& tree, int delta);

// Cuts one part at the levels congruent to q modulo h after rooting it at its
// smallest-id non-terminal and shortcutting degree-2 nodes (children ordered
// by ascending id). Every cut subtree gets, for each of its leaves v that is
// a marked internal node, the path from v to its rightmost child and then
// leftmost down to a leaf. Returns the parts' edge lists.
std::vector<std::vector<int>> level_cut(const Tree& tree, std::span<const int> part_edges,
                                        int h, int q);

struct HPowerResult {
  Decomposition decomposition;
  int q = 0;
  Units stage_one_power = 0;
  std::vector<Units> power_by_q;  // total power for each q in [0, h)
};

// Bounded-degree pass with delta = h, then level cuts on every part with more
// than h^h terminals. With no q the cheapest q (smallest on ties) is kept.
HPowerResult h_power_decompose(const Tree& tree, int h, std::optional<int> q = std::nullopt);

struct ComponentGraph {
  int terminal_nodes = 0;  // nodes 0..terminal_nodes-1 are source terminals in order
  int centers = 0;         // node terminal_nodes + i is the center of part i
  std::vector<std::pair<int, int>> edges;
  bool is_tree = false;
};

ComponentGraph component_graph(const Decomposition& decomposition);

}  // namespace powertree
