#include "powertree/subgraph.hpp"

#include <algorithm>

#include "powertree/errors.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

std::vector<EdgeId> strip_optional_leaves(const Instance& instance, std::vector<EdgeId> edges,
                                          std::span<const NodeId> required) {
  const int n = instance.node_count();
  std::vector<char> keep(n, 0);
  for (NodeId v : required) keep[v] = 1;
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> at(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Edge& e = instance.edge(edges[i]);
    ++degree[e.u];
    ++degree[e.v];
    at[e.u].push_back(i);
    at[e.v].push_back(i);
  }
  std::vector<char> removed(edges.size(), 0);
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < n; ++v) {
    if (!keep[v] && degree[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (degree[v] != 1) continue;
    for (int i : at[v]) {
      if (removed[i]) continue;
      removed[i] = 1;
      const NodeId w = instance.edge(edges[i]).other(v);
      --degree[v];
      --degree[w];
      if (!keep[w] && degree[w] == 1) stack.push_back(w);
      break;
    }
  }
  std::vector<EdgeId> result;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed[i]) result.push_back(edges[i]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<EdgeId> subtree_spanning(const Instance& instance, std::span<const EdgeId> edges,
                                     std::span<const NodeId> required) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  UnionFind uf(instance.node_count());
  std::vector<EdgeId> forest;
  for (EdgeId e : sorted) {
    if (uf.unite(instance.edge(e).u, instance.edge(e).v)) forest.push_back(e);
  }
  for (NodeId v : required) {
    if (!uf.same(v, required.front())) {
      throw Error(ErrorCode::kDisconnectedEdgeSet, "edge set does not connect the required nodes");
    }
  }
  // Drop the forest's other trees before stripping leaves.
  if (!required.empty()) {
    std::erase_if(forest, [&](EdgeId e) { return !uf.same(instance.edge(e).u, required.front()); });
  }
  return strip_optional_leaves(instance, std::move(forest), required);
}

bool connects(const Instance& instance, std::span<const EdgeId> edges,
              std::span<const NodeId> required) {
  UnionFind uf(instance.node_count());
  for (EdgeId e : edges) uf.unite(instance.edge(e).u, instance.edge(e).v);
  for (NodeId v : required) {
    if (!uf.same(v, required.front())) return false;
  }
  return true;
}

}  // namespace powertree
