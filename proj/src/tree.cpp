#include "powertree/tree.hpp"

#include <algorithm>
#include <numeric>

#include "powertree/errors.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

Tree::Tree(int node_count, std::vector<TreeEdge> edges, std::vector<NodeId> terminals,
           std::int64_t scale)
    : node_count_(node_count), edges_(std::move(edges)), scale_(scale) {
  adjacency_.assign(node_count_, {});
  is_terminal_.assign(node_count_, 0);
  UnionFind uf(node_count_);
  for (int e = 0; e < edge_count(); ++e) {
    const TreeEdge& edge = edges_[e];
    if (edge.u < 0 || edge.u >= node_count_ || edge.v < 0 || edge.v >= node_count_) {
      throw Error(ErrorCode::kNodeOutOfRange, "tree edge endpoint out of range");
    }
    if (edge.cost < 0) throw Error(ErrorCode::kNegativeCost, "negative tree edge cost");
    if (!uf.unite(edge.u, edge.v)) {
      throw Error(ErrorCode::kCyclicEdgeSet, "tree edges contain a cycle");
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  for (NodeId t : terminals) {
    if (t < 0 || t >= node_count_) {
      throw Error(ErrorCode::kNodeOutOfRange, "tree terminal out of range");
    }
    is_terminal_[t] = 1;
  }
  terminals_ = std::move(terminals);
  NodeId anchor = -1;
  for (NodeId v = 0; v < node_count_; ++v) {
    if (!contains(v)) continue;
    if (anchor < 0) anchor = v;
    if (!uf.same(anchor, v)) {
      throw Error(ErrorCode::kDisconnectedEdgeSet, "tree is not connected");
    }
  }
}

Tree Tree::from_instance(const Instance& instance, std::span<const EdgeId> edges) {
  std::vector<TreeEdge> tree_edges;
  for (EdgeId e : edges) {
    const Edge& edge = instance.edge(e);
    tree_edges.push_back({edge.u, edge.v, instance.units(e)});
  }
  return Tree(instance.node_count(), std::move(tree_edges), instance.terminals(),
              instance.scale());
}

bool Tree::is_full_component() const {
  for (NodeId v = 0; v < node_count_; ++v) {
    if (!contains(v)) continue;
    const bool leaf = degree(v) <= 1;
    if (leaf != static_cast<bool>(is_terminal_[v])) return false;
  }
  return true;
}

Units Tree::power() const {
  std::vector<int> all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  return subtree_power(*this, all);
}

Units Tree::cost() const {
  Units total = 0;
  for (const TreeEdge& edge : edges_) total = checked_add(total, edge.cost);
  return total;
}

Units subtree_power(const Tree& tree, std::span<const int> edges) {
  std::vector<Units> best(tree.node_count(), 0);
  for (int e : edges) {
    const TreeEdge& edge = tree.edge(e);
    best[edge.u] = std::max(best[edge.u], edge.cost);
    best[edge.v] = std::max(best[edge.v], edge.cost);
  }
  Units total = 0;
  for (Units b : best) total = checked_add(total, b);
  return total;
}

Units subtree_cost(const Tree& tree, std::span<const int> edges) {
  Units total = 0;
  for (int e : edges) total = checked_add(total, tree.edge(e).cost);
  return total;
}

std::vector<NodeId> subtree_terminals(const Tree& tree, std::span<const int> edges) {
  std::vector<NodeId> out;
  for (int e : edges) {
    for (NodeId x : {tree.edge(e).u, tree.edge(e).v}) {
      if (tree.is_terminal(x)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Tree random_full_component(Rng& rng, int min_leaves, int min_degree, int max_degree,
                           int max_cost) {
  if (min_degree < 3 || max_degree < min_degree || min_leaves < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bad full component parameters");
  }
  std::vector<std::pair<NodeId, NodeId>> links;
  std::vector<NodeId> leaves;
  int next = 0;
  auto draw_degree = [&] {
    return min_degree + static_cast<int>(uniform_below(rng, max_degree - min_degree + 1));
  };
  const NodeId first = next++;
  for (int i = 0, d = draw_degree(); i < d; ++i) {
    links.emplace_back(first, next);
    leaves.push_back(next++);
  }
  while (static_cast<int>(leaves.size()) < min_leaves) {
    const std::size_t pick = uniform_below(rng, leaves.size());
    const NodeId grown = leaves[pick];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    for (int i = 0, d = draw_degree(); i + 1 < d; ++i) {
      links.emplace_back(grown, next);
      leaves.push_back(next++);
    }
  }
  std::vector<NodeId> relabel(next);
  std::iota(relabel.begin(), relabel.end(), 0);
  for (int i = next - 1; i > 0; --i) std::swap(relabel[i], relabel[uniform_below(rng, i + 1)]);
  std::vector<TreeEdge> edges;
  for (auto [a, b] : links) {
    edges.push_back({relabel[a], relabel[b],
                     1 + static_cast<Units>(uniform_below(rng, max_cost))});
  }
  std::vector<NodeId> terminals;
  for (NodeId leaf : leaves) terminals.push_back(relabel[leaf]);
  return Tree(next, std::move(edges), std::move(terminals));
}

Instance random_tree_instance(Rng& rng, int nodes) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) {
    const auto parent = static_cast<NodeId>(uniform_below(rng, v));
    const auto num = static_cast<std::int64_t>(uniform_below(rng, 31));
    const auto den = 1 + static_cast<std::int64_t>(uniform_below(rng, 6));
    edges.push_back({parent, v, Rational(num, den)});
  }
  std::vector<NodeId> all(nodes);
  std::iota(all.begin(), all.end(), 0);
  return Instance(nodes, std::move(edges), std::move(all), 0);
}

}  // namespace powertree
