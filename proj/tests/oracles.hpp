#pragma once

// Brute-force reference computations used only by the tests. They share no
// algorithmic code with the library: only the Instance accessors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powertree/instance.hpp"

namespace oracle {

using powertree::EdgeId;
using powertree::Instance;
using powertree::NodeId;
using powertree::Rational;

inline Rational edge_set_power(const Instance& g, const std::vector<EdgeId>& edges) {
  std::vector<std::optional<Rational>> best(g.node_count());
  for (EdgeId e : edges) {
    for (NodeId x : {g.edge(e).u, g.edge(e).v}) {
      if (!best[x] || *best[x] < g.edge(e).cost) best[x] = g.edge(e).cost;
    }
  }
  Rational total(0);
  for (const auto& b : best)
    if (b) total += *b;
  return total;
}

inline Rational edge_set_cost(const Instance& g, const std::vector<EdgeId>& edges) {
  Rational total(0);
  for (EdgeId e : edges) total += g.edge(e).cost;
  return total;
}

// True iff the edges form one tree (connected, |E| = |V(E)| - 1) touching
// every required node. An empty edge set qualifies only for <= 1 required node.
inline bool is_tree_containing(const Instance& g, const std::vector<EdgeId>& edges,
                               const std::vector<NodeId>& required) {
  if (edges.empty()) return required.size() <= 1;
  std::vector<std::vector<NodeId>> adj(g.node_count());
  std::vector<char> touched(g.node_count(), 0);
  for (EdgeId e : edges) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  const int nodes = static_cast<int>(std::count(touched.begin(), touched.end(), 1));
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  for (NodeId r : required)
    if (!touched[r]) return false;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack = {g.edge(edges[0]).u};
  seen[stack[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == nodes;
}

// Minimum power over all simple s-t paths, by depth-first enumeration.
inline std::optional<Rational> brute_path_power(const Instance& g, NodeId s, NodeId t) {
  std::optional<Rational> best;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<EdgeId> path;
  std::function<void(NodeId)> walk = [&](NodeId x) {
    if (x == t) {
      // Power of a path: ends pay their single edge, inner nodes the larger one.
      Rational p = g.edge(path.front()).cost + g.edge(path.back()).cost;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        p += std::max(g.edge(path[i]).cost, g.edge(path[i + 1]).cost);
      if (!best || p < *best) best = p;
      return;
    }
    for (const auto& inc : g.incident(x)) {
      if (on_path[inc.to]) continue;
      on_path[inc.to] = 1;
      path.push_back(inc.edge);
      walk(inc.to);
      path.pop_back();
      on_path[inc.to] = 0;
    }
  };
  on_path[s] = 1;
  walk(s);
  return best;
}

// Calls visit(edges) for every edge subset of size in [lo, hi], in
// lexicographic order of sorted edge ids.
inline void for_each_subset(int m, int lo, int hi,
                            const std::function<void(const std::vector<EdgeId>&)>& visit) {
  for (int size = lo; size <= std::min(hi, m); ++size) {
    std::vector<EdgeId> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size == 0) {
      visit(pick);
      continue;
    }
    while (true) {
      visit(pick);
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
}

struct TreeOptimum {
  Rational value;
  std::vector<EdgeId> edges;
};

// Best tree containing `required` under `score`, over every edge subset.
inline std::optional<TreeOptimum> brute_best_tree(
    const Instance& g, const std::vector<NodeId>& required,
    const std::function<Rational(const std::vector<EdgeId>&)>& score) {
  std::optional<TreeOptimum> best;
  for_each_subset(g.edge_count(), 0, g.node_count() - 1, [&](const std::vector<EdgeId>& edges) {
    if (!is_tree_containing(g, edges, required)) return;
    const Rational v = score(edges);
    if (!best || v < best->value) best = TreeOptimum{v, edges};
  });
  return best;
}

inline std::optional<TreeOptimum> brute_min_power_tree(const Instance& g,
                                                       const std::vector<NodeId>& required) {
  return brute_best_tree(g, required,
                         [&](const std::vector<EdgeId>& e) { return edge_set_power(g, e); });
}

inline std::optional<TreeOptimum> brute_min_cost_tree(const Instance& g,
                                                      const std::vector<NodeId>& required) {
  return brute_best_tree(g, required,
                         [&](const std::vector<EdgeId>& e) { return edge_set_cost(g, e); });
}

// Every nonempty subset of the non-root terminals.
inline std::vector<std::vector<NodeId>> all_cut_sets(const Instance& g) {
  std::vector<NodeId> others;
  for (NodeId t : g.terminals())
    if (t != g.root()) others.push_back(t);
  std::vector<std::vector<NodeId>> cuts;
  for (unsigned mask = 1; mask < (1u << others.size()); ++mask) {
    std::vector<NodeId> w;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1u) w.push_back(others[i]);
    cuts.push_back(w);
  }
  return cuts;
}

using Exact = boost::multiprecision::cpp_rational;

// min c.x subject to A x >= b, x >= 0, by enumerating every vertex: each
// choice of n tight constraints is solved exactly and kept if feasible.
// Returns nullopt if infeasible. Only for bounded problems with a handful of
// variables.
inline std::optional<Exact> vertex_enumeration_lp(const std::vector<Exact>& c,
                                                  const std::vector<std::vector<Exact>>& a,
                                                  const std::vector<Exact>& b) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(a.size());
  // Constraint rows: the m given ones, then x_j >= 0.
  std::vector<std::vector<Exact>> rows = a;
  std::vector<Exact> rhs = b;
  for (int j = 0; j < n; ++j) {
    std::vector<Exact> unit(n, 0);
    unit[j] = 1;
    rows.push_back(unit);
    rhs.push_back(0);
  }
  const int total = m + n;
  std::optional<Exact> best;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<Exact>> mat(n, std::vector<Exact>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mat[i][j] = rows[pick[i]][j];
      mat[i][n] = rhs[pick[i]];
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (mat[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(mat[col], mat[piv]);
      for (int r = 0; r < n; ++r) {
        if (r == col || mat[r][col] == 0) continue;
        const Exact f = mat[r][col] / mat[col][col];
        for (int k = col; k <= n; ++k) mat[r][k] -= f * mat[col][k];
      }
    }
    if (!singular) {
      std::vector<Exact> x(n);
      for (int i = 0; i < n; ++i) x[i] = mat[i][n] / mat[i][i];
      bool feasible = true;
      for (int r = 0; r < total && feasible; ++r) {
        Exact lhs = 0;
        for (int j = 0; j < n; ++j) lhs += rows[r][j] * x[j];
        feasible = lhs >= rhs[r];
      }
      if (feasible) {
        Exact value = 0;
        for (int j = 0; j < n; ++j) value += c[j] * x[j];
        if (!best || value < *best) best = value;
      }
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == total - n + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < n; ++i) pick[i] = pick[i - 1] + 1;
  }
  return best;
}

}  // namespace oracle
