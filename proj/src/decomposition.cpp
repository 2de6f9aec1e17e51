#include "powertree/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "powertree/errors.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

namespace {

// Rooted view of the subtree formed by a subset of tree edges.
struct Rooted {
  std::vector<int> order;                 // BFS order from the root
  std::vector<NodeId> parent;
  std::vector<int> parent_edge;
  std::vector<std::vector<NodeId>> children;
  std::vector<int> degree;
};

Rooted root_subtree(const Tree& tree, const std::vector<char>& in_part, NodeId root) {
  const int n = tree.node_count();
  Rooted r;
  r.parent.assign(n, -1);
  r.parent_edge.assign(n, -1);
  r.children.assign(n, {});
  r.degree.assign(n, 0);
  for (int e = 0; e < tree.edge_count(); ++e) {
    if (!in_part[e]) continue;
    ++r.degree[tree.edge(e).u];
    ++r.degree[tree.edge(e).v];
  }
  std::vector<char> seen(n, 0);
  r.order.push_back(root);
  seen[root] = 1;
  for (std::size_t h = 0; h < r.order.size(); ++h) {
    const NodeId x = r.order[h];
    for (const Incidence& inc : tree.incident(x)) {
      if (!in_part[inc.edge] || seen[inc.to]) continue;
      seen[inc.to] = 1;
      r.parent[inc.to] = x;
      r.parent_edge[inc.to] = inc.edge;
      r.children[x].push_back(inc.to);
      r.order.push_back(inc.to);
    }
  }
  return r;
}

void collect_subtree_edges(const Rooted& r, NodeId u, std::vector<int>& out) {
  std::vector<NodeId> stack{u};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (NodeId c : r.children[x]) {
      out.push_back(r.parent_edge[c]);
      stack.push_back(c);
    }
  }
}

Units power_int(std::int64_t base, int exponent) {
  Units result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<Units>::max() / base) return std::numeric_limits<Units>::max();
    result *= base;
  }
  return result;
}

}  // namespace

Part make_part(const Tree& tree, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Part part;
  part.power = subtree_power(tree, edges);
  part.terminals = subtree_terminals(tree, edges);
  part.edges = std::move(edges);
  return part;
}

Decomposition make_decomposition(const Tree& tree, std::vector<std::vector<int>> part_edges) {
  Decomposition d{tree, {}, 0};
  for (auto& edges : part_edges) {
    d.parts.push_back(make_part(tree, std::move(edges)));
    d.total_power += d.parts.back().power;
  }
  return d;
}

int part_degree(const Tree& tree, const Part& part, NodeId v) {
  int degree = 0;
  for (int e : part.edges) degree += (tree.edge(e).u == v) + (tree.edge(e).v == v);
  return degree;
}

int max_part_degree(const Tree& tree, const Part& part) {
  std::vector<int> degree(tree.node_count(), 0);
  int best = 0;
  for (int e : part.edges) {
    best = std::max({best, ++degree[tree.edge(e).u], ++degree[tree.edge(e).v]});
  }
  return best;
}

DummyLeaves attach_dummy_leaves(const Tree& tree) {
  const int n = tree.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (tree.degree(v) == 1 && !tree.is_terminal(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tree has a non-terminal leaf " + std::to_string(v));
    }
  }
  const auto& terminals = tree.terminals();
  std::vector<TreeEdge> edges = tree.edges();
  std::vector<NodeId> pendants;
  std::vector<NodeId> original_of(n + terminals.size());
  for (NodeId v = 0; v < n; ++v) original_of[v] = v;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const NodeId pendant = n + static_cast<NodeId>(i);
    edges.push_back({terminals[i], pendant, 0});
    pendants.push_back(pendant);
    original_of[pendant] = terminals[i];
  }
  return DummyLeaves{Tree(n + static_cast<int>(terminals.size()), std::move(edges),
                          std::move(pendants), tree.scale()),
                     tree.edge_count(), std::move(original_of)};
}

Decomposition contract_dummy_leaves(const DummyLeaves& padded, const Tree& original,
                                    const Decomposition& decomposition) {
  Decomposition result{original, {}, 0};
  for (const Part& part : decomposition.parts) {
    Part mapped;
    for (int e : part.edges) {
      if (e < padded.original_edge_count) mapped.edges.push_back(e);
    }
    for (NodeId t : part.terminals) mapped.terminals.push_back(padded.original_of[t]);
    std::sort(mapped.terminals.begin(), mapped.terminals.end());
    mapped.terminals.erase(std::unique(mapped.terminals.begin(), mapped.terminals.end()),
                           mapped.terminals.end());
    mapped.power = subtree_power(original, mapped.edges);
    result.total_power += mapped.power;
    result.parts.push_back(std::move(mapped));
  }
  return result;
}

Decomposition bounded_degree_decompose(const Tree& tree, int delta) {
  if (delta < 3) throw Error(ErrorCode::kInvalidArgument, "delta must be at least 3");
  if (!tree.is_full_component()) {
    throw Error(ErrorCode::kInvalidArgument, "tree must be a full component");
  }
  std::vector<std::vector<int>> parts;
  std::vector<char> current(tree.edge_count(), 1);
  if (tree.edge_count() == 0) return make_decomposition(tree, {{}});
  NodeId root = -1;
  for (NodeId v = 0; v < tree.node_count() && root < 0; ++v) {
    if (tree.degree(v) == 1) root = v;
  }
  const int half = (delta + 1) / 2;
  while (true) {
    const Rooted r = root_subtree(tree, current, root);
    // Whether every proper descendant has degree <= delta.
    std::vector<char> calm(tree.node_count(), 1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      for (NodeId c : r.children[*it]) calm[*it] = calm[*it] && calm[c] && r.degree[c] <= delta;
    }
    NodeId split = -1;
    for (NodeId v : r.order) {
      if (r.degree[v] > delta && calm[v] && (split < 0 || v < split)) split = v;
    }
    if (split < 0) break;

    auto cost_to = [&](NodeId c) { return tree.edge(r.parent_edge[c]).cost; };
    // Cheapest power of a leaf-ward path below c, given the edge into c.
    std::vector<Units> below(tree.node_count(), 0);
    std::vector<NodeId> next(tree.node_count(), -1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      const NodeId x = *it;
      if (x == root) continue;
      const Units in = cost_to(x);
      if (r.children[x].empty()) {
        below[x] = in;
        continue;
      }
      std::vector<NodeId> kids = r.children[x];
      std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
        return std::make_pair(cost_to(a), a) < std::make_pair(cost_to(b), b);
      });
      below[x] = std::numeric_limits<Units>::max();
      for (NodeId w : kids) {
        const Units value = std::max(in, cost_to(w)) + below[w];
        if (value < below[x]) {
          below[x] = value;
          next[x] = w;
        }
      }
    }
    auto descent = [&](NodeId u) {
      std::vector<int> edges{r.parent_edge[u]};
      for (NodeId x = u; next[x] >= 0; x = next[x]) edges.push_back(r.parent_edge[next[x]]);
      return edges;
    };

    std::vector<NodeId> kids = r.children[split];
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return std::make_pair(cost_to(a), a) < std::make_pair(cost_to(b), b);
    });
    std::vector<std::vector<NodeId>> groups;
    std::size_t taken = 0;
    while (kids.size() - taken > static_cast<std::size_t>(delta - 2)) {
      groups.emplace_back(kids.begin() + taken, kids.begin() + taken + half);
      taken += half;
    }
    std::vector<int> carried;  // path appended to the next group's part
    for (const auto& group : groups) {
      std::vector<int> edges = carried;
      for (NodeId u : group) {
        edges.push_back(r.parent_edge[u]);
        collect_subtree_edges(r, u, edges);
      }
      for (int e : edges) current[e] = 0;
      NodeId pick = group.front();
      for (NodeId u : group) {
        if (below[u] < below[pick]) pick = u;
      }
      carried = descent(pick);
      parts.push_back(std::move(edges));
    }
    for (int e : carried) current[e] = 1;
  }
  std::vector<int> rest;
  for (int e = 0; e < tree.edge_count(); ++e) {
    if (current[e]) rest.push_back(e);
  }
  parts.push_back(std::move(rest));
  return make_decomposition(tree, std::move(parts));
}

std::vector<std::vector<int>> level_cut(const Tree& tree, std::span<const int> part_edges,
                                        int h, int q) {
  if (h < 1 || q < 0 || q >= h) throw Error(ErrorCode::kInvalidArgument, "need 0 <= q < h");
  std::vector<char> in_part(tree.edge_count(), 0);
  for (int e : part_edges) in_part[e] = 1;
  NodeId root = -1;
  for (int e : part_edges) {
    for (NodeId v : {tree.edge(e).u, tree.edge(e).v}) {
      if (!tree.is_terminal(v) && (root < 0 || v < root)) root = v;
    }
  }
  if (root < 0) return {std::vector<int>(part_edges.begin(), part_edges.end())};
  const Rooted r = root_subtree(tree, in_part, root);

  // Shortcut tree: each kept node's children are reached through chains of
  // degree-2 nodes, remembered as edge lists.
  struct Link {
    NodeId to;
    std::vector<int> edges;
  };
  std::vector<std::vector<Link>> down(tree.node_count());
  std::vector<int> level(tree.node_count(), -1);
  std::vector<NodeId> kept{root};
  level[root] = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const NodeId x = kept[i];
    for (NodeId c : r.children[x]) {
      Link link{c, {r.parent_edge[c]}};
      while (r.children[link.to].size() == 1) {
        link.to = r.children[link.to].front();
        link.edges.push_back(r.parent_edge[link.to]);
      }
      level[link.to] = level[x] + 1;
      kept.push_back(link.to);
      down[x].push_back(std::move(link));
    }
    std::sort(down[x].begin(), down[x].end(),
              [](const Link& a, const Link& b) { return a.to < b.to; });
  }
  auto marked = [&](NodeId x) { return level[x] % h == q; };
  auto path_from = [&](NodeId v) {
    std::vector<int> edges = down[v].back().edges;
    for (NodeId x = down[v].back().to; !down[x].empty(); x = down[x].front().to) {
      edges.insert(edges.end(), down[x].front().edges.begin(), down[x].front().edges.end());
    }
    return edges;
  };

  std::vector<std::vector<int>> parts;
  for (NodeId top : kept) {
    if (down[top].empty() || (top != root && !marked(top))) continue;
    std::vector<int> edges;
    std::vector<NodeId> stack{top};
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const Link& link : down[x]) {
        edges.insert(edges.end(), link.edges.begin(), link.edges.end());
        if (down[link.to].empty()) continue;
        if (marked(link.to)) {
          const auto extra = path_from(link.to);
          edges.insert(edges.end(), extra.begin(), extra.end());
        } else {
          stack.push_back(link.to);
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    parts.push_back(std::move(edges));
  }
  return parts;
}

HPowerResult h_power_decompose(const Tree& tree, int h, std::optional<int> q) {
  if (h < 3) throw Error(ErrorCode::kInvalidArgument, "h must be at least 3");
  if (q && (*q < 0 || *q >= h)) throw Error(ErrorCode::kInvalidArgument, "q must be in [0, h)");
  const Decomposition stage_one = bounded_degree_decompose(tree, h);
  const Units cap = power_int(h, h);
  HPowerResult result{stage_one, 0, stage_one.total_power, {}};
  std::optional<Decomposition> best;
  for (int option = 0; option < h; ++option) {
    std::vector<std::vector<int>> parts;
    for (const Part& part : stage_one.parts) {
      if (static_cast<Units>(part.terminals.size()) > cap) {
        for (auto& edges : level_cut(tree, part.edges, h, option)) parts.push_back(std::move(edges));
      } else {
        parts.push_back(part.edges);
      }
    }
    Decomposition candidate = make_decomposition(tree, std::move(parts));
    result.power_by_q.push_back(candidate.total_power);
    const bool wanted = q ? option == *q : (!best || candidate.total_power < best->total_power);
    if (wanted) {
      best = std::move(candidate);
      result.q = option;
    }
  }
  result.decomposition = std::move(*best);
  return result;
}

ComponentGraph component_graph(const Decomposition& decomposition) {
  const Tree& tree = decomposition.source;
  ComponentGraph graph;
  const auto& terminals = tree.terminals();
  graph.terminal_nodes = static_cast<int>(terminals.size());
  graph.centers = static_cast<int>(decomposition.parts.size());
  for (int i = 0; i < graph.centers; ++i) {
    for (NodeId t : decomposition.parts[i].terminals) {
      const auto it = std::lower_bound(terminals.begin(), terminals.end(), t);
      if (it == terminals.end() || *it != t) continue;
      graph.edges.emplace_back(static_cast<int>(it - terminals.begin()), graph.terminal_nodes + i);
    }
  }
  const int nodes = graph.terminal_nodes + graph.centers;
  UnionFind uf(nodes);
  int joined = 0;
  for (auto [a, b] : graph.edges) joined += uf.unite(a, b) ? 1 : 0;
  graph.is_tree = nodes > 0 && joined == nodes - 1 &&
                  static_cast<int>(graph.edges.size()) == nodes - 1;
  return graph;
}

}  // namespace powertree
