#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "powertree/parallel.hpp"
#include "powertree/rng.hpp"
#include "powertree/tree.hpp"

namespace powertree {

// Rooted binary tree derived from a full component. Node 0 is the root that
// splits one source edge; the anchor side keeps the edge's cost and the other
// side gets a zero-cost half. A node with more than two children hangs them
// as a chain of zero-cost dummies, most expensive child first, so its most
// expensive edges sit on the highest consecutive levels. Degree-2 source
// nodes are shortcut and their edge costs summed.
struct BinaryTree {
  std::vector<int> parent;                  // -1 at the root
  std::vector<std::array<int, 2>> children; // {-1, -1} at leaves
  std::vector<Units> cost;                  // cost of the edge to the parent
  std::vector<char> dummy;                  // edge to the parent is a zero-cost dummy
  std::vector<NodeId> original;             // source node, -1 for the root and dummies
  std::vector<int> level;
  std::vector<int> node_of_edge;            // source edge -> lower bin node of its bin edge

  int node_count() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int x) const { return children[x][0] < 0; }
  int bin_node(NodeId source) const;
};

// Throws kInvalidArgument unless the tree is a full component with at least
// two terminals and split_edge is incident to anchor.
BinaryTree build_binary_tree(const Tree& tree, int split_edge, NodeId anchor);
// Splits the cheapest edge at v (largest index on ties) with v as anchor, so
// all other edges at v hang below it.
BinaryTree build_binary_tree_at(const Tree& tree, NodeId v);

// Per bin node, the slot (0 or 1) of its marked child edge; -1 at leaves.
using Marking = std::vector<signed char>;
Marking random_marking(const BinaryTree& bin, Rng& rng);

struct WitnessStructure {
  Marking marking;
  // Leaf reached from each bin node by unmarked edges (source ids).
  std::vector<NodeId> descent_leaf;
  std::vector<std::pair<NodeId, NodeId>> tstar;  // terminal pairs, first < second
  std::vector<std::vector<int>> witness;         // per source edge: indices into tstar
};

// A marked edge x -> y contributes the terminal pair (descent leaf of x,
// descent leaf of y); a pair is in the witness set of an edge iff the bin
// path between its terminals crosses that edge's bin edge.
WitnessStructure derive_witness(const BinaryTree& bin, const Tree& tree, Marking marking);
WitnessStructure sample_witness(const BinaryTree& bin, const Tree& tree, std::uint64_t seed);

struct WitnessStats {
  int trials = 0;
  int i = 0;
  int top_hits = 0;               // trials with s' = d'
  double expected_probability = 0;
  double frequency = 0;
  double sigma = 0;               // binomial standard deviation of the frequency
  bool frequency_within_3_sigma = false;
  std::map<int, int> size_histogram;  // |W^i(v)| -> trials
  double mean_harmonic = 0;           // empirical mean of H_{|W^i(v)|}
  double harmonic_std_error = 0;
  double delta_bound = 0;             // delta_steiner(1, i)
  bool harmonic_within_bound = false; // mean <= bound + 3 standard errors
  int max_within_leaves = 0;          // largest count of T* edges among C' leaves
  bool all_spanning = true;           // every T* was a spanning tree on the terminals
};

// Trial t marks with seed derive_seed(seed, t). The chain under v gives
// e^1..e^i (most expensive first); T' is those edges plus their siblings,
// d' its leaf that ends no e^j, and s' the leaf reached from v by unmarked
// edges. Throws kInvalidArgument unless d(v) >= 3, 1 <= i <= d(v) - 2 and
// trials >= 1000.
WitnessStats witness_stats(const Tree& tree, NodeId v, int i, int trials, std::uint64_t seed,
                           Execution execution = Execution::kParallel);

}  // namespace powertree
