#pragma once

#include <tuple>
#include <vector>

#include "powertree/generators.hpp"
#include "powertree/instance.hpp"
#include "powertree/rng.hpp"
#include "powertree/tree.hpp"

namespace fixture {

using namespace powertree;

struct E {
  NodeId u;
  NodeId v;
  Rational cost;
};

inline Instance make(int n, const std::vector<E>& edges, std::vector<NodeId> terminals,
                     NodeId root = -1) {
  std::vector<Edge> list;
  for (const E& e : edges) list.push_back({e.u, e.v, e.cost});
  if (root < 0) root = *std::min_element(terminals.begin(), terminals.end());
  return Instance(n, std::move(list), std::move(terminals), root);
}

inline std::vector<NodeId> all_nodes(int n) {
  std::vector<NodeId> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline std::vector<EdgeId> all_edges(const Instance& g) {
  std::vector<EdgeId> v(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) v[i] = i;
  return v;
}

// Seeded uniform-random instance; small costs so that ties are common.
inline Instance random_graph(std::uint64_t seed, int nodes, int terminals, int max_cost = 6,
                             double density = 0.4) {
  GeneratorParams p;
  p.nodes = nodes;
  p.terminals = terminals;
  p.seed = seed;
  p.max_cost = max_cost;
  p.density = density;
  return generate(GeneratorKind::kUniformRandom, p);
}

// Decomposition example with one split node of degree 4 (ids chosen so the
// leaf f is the smallest-id leaf and becomes the root).
//   f0 r1 v2 s4=3 s2=4 a5 b6 c7 d8 e9
inline Tree split_node_tree() {
  std::vector<TreeEdge> edges = {
      {1, 0, 5}, {1, 9, 5}, {1, 2, 5},  // r-f, r-e, r-v
      {2, 3, 1}, {2, 4, 2}, {2, 8, 4},  // v-s4, v-s2, v-d
      {3, 5, 6}, {3, 6, 3}, {4, 7, 8},  // s4-a, s4-b, s2-c
  };
  return Tree(10, edges, {0, 5, 6, 7, 8, 9});
}

// Level-cut example: r0 s1=1 v2 s3=3 a4 b5 u6 s7=7 c8 s9=9 d10 e11 f12 s13=13
// g14 h15 i16; terminals a..i.
inline Tree level_cut_tree() {
  const std::vector<std::pair<int, int>> pairs = {
      {0, 1},  {0, 2},  {1, 3},  {1, 4},  {2, 5},   {2, 6},   {3, 7},   {3, 8},
      {6, 9},  {6, 10}, {7, 11}, {7, 12}, {9, 13},  {9, 14},  {13, 15}, {13, 16}};
  std::vector<TreeEdge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, 1});
  return Tree(17, edges, {4, 5, 8, 10, 11, 12, 14, 15, 16});
}

// Witness example: v0 s2=1 s3=2 sl=3 a4 b5 c6 d7 e8 f9.
inline Tree witness_tree() {
  std::vector<TreeEdge> edges = {
      {0, 3, 1}, {0, 6, 5}, {0, 7, 8}, {0, 1, 2},  // v-sl, v-c, v-d, v-s2
      {3, 4, 9}, {3, 5, 7}, {1, 2, 3}, {1, 9, 6},  // sl-a, sl-b, s2-s3, s2-f
      {2, 8, 4},                                   // s3-e
  };
  return Tree(10, edges, {4, 5, 6, 7, 8, 9});
}

inline int tree_edge(const Tree& t, NodeId a, NodeId b) {
  for (int e = 0; e < t.edge_count(); ++e) {
    const TreeEdge& te = t.edge(e);
    if ((te.u == a && te.v == b) || (te.u == b && te.v == a)) return e;
  }
  return -1;
}

}  // namespace fixture
