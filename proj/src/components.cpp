#include "powertree/components.hpp"

#include <algorithm>
#include <exception>

#include "powertree/errors.hpp"
#include "powertree/subgraph.hpp"

namespace powertree {

namespace {

using ShapeEdges = std::vector<std::pair<int, int>>;

// Labelled trees on positions 0..q+a-1 in which positions >= q (branch nodes)
// have degree >= 3, generated from Pruefer sequences.
std::vector<ShapeEdges> make_shapes(int q, int a) {
  const int m = q + a;
  std::vector<ShapeEdges> shapes;
  if (m == 2) {
    if (a == 0) shapes.push_back({{0, 1}});
    return shapes;
  }
  std::vector<int> code(m - 2, 0);
  while (true) {
    std::vector<int> degree(m, 1);
    for (int c : code) ++degree[c];
    bool ok = true;
    for (int p = q; p < m; ++p) ok = ok && degree[p] >= 3;
    if (ok) {
      ShapeEdges edges;
      for (int c : code) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        --degree[leaf];
        --degree[c];
      }
      int first = -1;
      for (int p = 0; p < m; ++p) {
        if (degree[p] == 1) {
          if (first < 0) {
            first = p;
          } else {
            edges.emplace_back(first, p);
          }
        }
      }
      std::sort(edges.begin(), edges.end());
      shapes.push_back(std::move(edges));
    }
    int pos = m - 3;
    while (pos >= 0 && code[pos] == m - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  return shapes;
}

const std::vector<ShapeEdges>& shapes_for(int q, int a) {
  static const auto table = [] {
    std::vector<std::vector<std::vector<ShapeEdges>>> t(kMaxComponentTerminals + 1);
    for (int q = 2; q <= kMaxComponentTerminals; ++q) {
      t[q].resize(q - 1);
      for (int a = 0; a <= q - 2; ++a) t[q][a] = make_shapes(q, a);
    }
    return t;
  }();
  return table[q][a];
}

Units saturating_add(Units a, Units b) {
  return (a >= kInfiniteUnits || b >= kInfiniteUnits) ? kInfiniteUnits : a + b;
}

// Rooted view of one shape: BFS order from position 0 with parents.
struct RootedShape {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
};

RootedShape root_shape(const ShapeEdges& edges, int m) {
  RootedShape r;
  r.parent.assign(m, -1);
  r.children.assign(m, {});
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(m, 0);
  r.order.push_back(0);
  seen[0] = 1;
  for (std::size_t h = 0; h < r.order.size(); ++h) {
    const int x = r.order[h];
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      r.parent[y] = x;
      r.children[x].push_back(y);
      r.order.push_back(y);
    }
  }
  return r;
}

}  // namespace

ComponentOracle::ComponentOracle(const Instance& instance)
    : instance_(instance), darts_(instance) {
  const int n = instance.node_count();
  levels_.assign(n, {});
  for (NodeId v = 0; v < n; ++v) {
    for (const Incidence& inc : instance.incident(v)) levels_[v].push_back(instance.units(inc.edge));
    std::sort(levels_[v].begin(), levels_[v].end());
    levels_[v].erase(std::unique(levels_[v].begin(), levels_[v].end()), levels_[v].end());
  }
  offset_.assign(static_cast<std::size_t>(n) * n, 0);
  std::size_t total = 0;
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = 0; y < n; ++y) {
      offset_[static_cast<std::size_t>(x) * n + y] = total;
      total += levels_[x].size() * levels_[y].size();
    }
  }
  best_.assign(total, kInfiniteUnits);
  for (NodeId x = 0; x < n; ++x) {
    for (int d1 : darts_.out_darts(x)) {
      const int i = level_of(x, darts_.cost(d1));
      for (int d2 = 0; d2 < darts_.dart_count(); ++d2) {
        const NodeId y = darts_.head(d2);
        if (y == x) continue;
        const Units value = darts_.interior(d1, d2);
        if (value >= kInfiniteUnits) continue;
        const std::size_t at = offset_[static_cast<std::size_t>(x) * n + y] +
                               static_cast<std::size_t>(i) * levels_[y].size() +
                               level_of(y, darts_.cost(d2));
        best_[at] = std::min(best_[at], value);
      }
    }
  }
  // Turn per-level minima into minima over all darts at or below each level.
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = 0; y < n; ++y) {
      const std::size_t base = offset_[static_cast<std::size_t>(x) * n + y];
      const std::size_t ly = levels_[y].size();
      for (std::size_t i = 0; i < levels_[x].size(); ++i) {
        for (std::size_t j = 0; j < ly; ++j) {
          Units& cell = best_[base + i * ly + j];
          if (i > 0) cell = std::min(cell, best_[base + (i - 1) * ly + j]);
          if (j > 0) cell = std::min(cell, best_[base + i * ly + j - 1]);
        }
      }
    }
  }
}

int ComponentOracle::level_of(NodeId v, Units cost) const {
  const auto& lv = levels_[v];
  return static_cast<int>(std::lower_bound(lv.begin(), lv.end(), cost) - lv.begin());
}

Component ComponentOracle::solve(std::vector<NodeId> terminals, int k_cap) const {
  if (k_cap < 1 || k_cap > kMaxComponentTerminals) {
    throw Error(ErrorCode::kInvalidArgument, "component terminal cap must be in [1, 4]");
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty() || static_cast<int>(terminals.size()) > k_cap) {
    throw Error(ErrorCode::kInvalidArgument, "component needs between 1 and k_cap terminals");
  }
  for (NodeId t : terminals) {
    if (t < 0 || t >= instance_.node_count() || !instance_.is_terminal(t)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "component node " + std::to_string(t) + " is not a terminal");
    }
  }
  Component result;
  result.terminals = terminals;
  result.power = 0;
  if (terminals.size() == 1) return result;

  const int q = static_cast<int>(terminals.size());
  Units best_value = kInfiniteUnits;
  std::vector<NodeId> best_nodes;
  const ShapeEdges* best_shape = nullptr;
  std::vector<int> best_levels;

  std::vector<NodeId> nodes(terminals);
  std::vector<std::vector<Units>> f;
  std::vector<std::vector<int>> pick;  // pick[y][i]: y's level given parent level i
  // Branch nodes may be any node outside Q, other terminals included.
  std::vector<NodeId> branch_candidates;
  for (NodeId v = 0; v < instance_.node_count(); ++v) {
    if (!std::binary_search(terminals.begin(), terminals.end(), v) &&
        instance_.incident(v).size() >= 3)
      branch_candidates.push_back(v);
  }
  const int steiner = static_cast<int>(branch_candidates.size());

  for (int a = 0; a <= q - 2 && a <= steiner; ++a) {
    std::vector<int> chosen(a);
    for (int i = 0; i < a; ++i) chosen[i] = i;
    while (true) {
      nodes.resize(q);
      for (int c : chosen) nodes.push_back(branch_candidates[c]);
      const int m = q + a;
      for (const ShapeEdges& shape : shapes_for(q, a)) {
        const RootedShape rooted = root_shape(shape, m);
        f.assign(m, {});
        pick.assign(m, {});
        bool feasible = true;
        for (int h = m - 1; h >= 0 && feasible; --h) {
          const int x = rooted.order[h];
          const NodeId gx = nodes[x];
          const auto& lx = levels_[gx];
          if (lx.empty()) {
            feasible = false;
            break;
          }
          f[x].assign(lx.size(), 0);
          for (int y : rooted.children[x]) {
            const NodeId gy = nodes[y];
            const auto& ly = levels_[gy];
            pick[y].assign(lx.size(), -1);
            for (std::size_t i = 0; i < lx.size(); ++i) {
              Units low = kInfiniteUnits;
              for (std::size_t j = 0; j < ly.size(); ++j) {
                const Units v = saturating_add(best(gx, gy, i, j), saturating_add(ly[j], f[y][j]));
                if (v < low) {
                  low = v;
                  pick[y][i] = static_cast<int>(j);
                }
              }
              f[x][i] = saturating_add(f[x][i], low);
            }
          }
        }
        if (!feasible) continue;
        Units value = kInfiniteUnits;
        int root_level = -1;
        for (std::size_t i = 0; i < levels_[nodes[0]].size(); ++i) {
          const Units v = saturating_add(levels_[nodes[0]][i], f[0][i]);
          if (v < value) {
            value = v;
            root_level = static_cast<int>(i);
          }
        }
        if (value < best_value) {
          best_value = value;
          best_nodes = nodes;
          best_shape = &shape;
          best_levels.assign(m, -1);
          best_levels[0] = root_level;
          for (int h = 1; h < m; ++h) {
            const int y = rooted.order[h];
            best_levels[y] = pick[y][best_levels[rooted.parent[y]]];
          }
        }
      }
      int pos = a - 1;
      while (pos >= 0 && chosen[pos] == steiner - a + pos) --pos;
      if (pos < 0) break;
      ++chosen[pos];
      for (int i = pos + 1; i < a; ++i) chosen[i] = chosen[i - 1] + 1;
    }
  }
  if (best_shape == nullptr) {
    throw Error(ErrorCode::kUnreachable, "component terminals cannot be connected");
  }

  // Realize: for each shape edge pick the cheapest walk within the thresholds.
  std::vector<EdgeId> edges;
  for (auto [x, y] : *best_shape) {
    const NodeId gx = best_nodes[x];
    const NodeId gy = best_nodes[y];
    const Units cap_x = levels_[gx][best_levels[x]];
    const Units cap_y = levels_[gy][best_levels[y]];
    const Units target = best(gx, gy, best_levels[x], best_levels[y]);
    int first = -1, last = -1;
    for (int d1 : darts_.out_darts(gx)) {
      if (darts_.cost(d1) > cap_x) continue;
      for (int d2 : darts_.in_darts(gy)) {
        if (darts_.cost(d2) > cap_y) continue;
        if (first < 0 && darts_.interior(d1, d2) == target) {
          first = d1;
          last = d2;
        }
      }
    }
    if (first < 0) throw Error(ErrorCode::kInternal, "component realization lost its walk");
    for (int d : darts_.walk(first, last)) edges.push_back(DartTable::edge_of(d));
  }
  result.edges = subtree_spanning(instance_, edges, terminals);
  result.power_units = power_units(instance_, result.edges);
  if (result.power_units != best_value) {
    throw Error(ErrorCode::kInternal, "component realization does not match its optimum");
  }
  result.power = instance_.to_cost(result.power_units);
  return result;
}

Component min_power_component(const Instance& instance, std::vector<NodeId> terminals,
                              int k_cap) {
  return ComponentOracle(instance).solve(std::move(terminals), k_cap);
}

std::size_t column_count(int terminal_count, int k) {
  std::size_t total = 0;
  for (int size = 2; size <= std::min(k, terminal_count); ++size) {
    std::size_t choose = 1;
    for (int i = 0; i < size; ++i) choose = choose * (terminal_count - i) / (i + 1);
    total += choose * size;
  }
  return total;
}

ColumnSet enumerate_columns(const Instance& instance, int k, Execution execution) {
  if (k < 2 || k > kMaxComponentTerminals) {
    throw Error(ErrorCode::kInvalidArgument, "k must be in [2, 4]");
  }
  if (column_count(static_cast<int>(instance.terminals().size()), k) > kMaxColumns) {
    throw Error(ErrorCode::kGuardExceeded, "column count exceeds 50000");
  }
  return enumerate_columns(ComponentOracle(instance), k, execution);
}

ColumnSet enumerate_columns(const ComponentOracle& oracle, int k, Execution execution) {
  if (k < 2 || k > kMaxComponentTerminals) {
    throw Error(ErrorCode::kInvalidArgument, "k must be in [2, 4]");
  }
  const auto& terminals = oracle.instance().terminals();
  const int r = static_cast<int>(terminals.size());
  if (column_count(r, k) > kMaxColumns) {
    throw Error(ErrorCode::kGuardExceeded, "column count exceeds 50000");
  }
  std::vector<std::vector<NodeId>> sets;
  for (int size = 2; size <= std::min(k, r); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<NodeId> q;
      for (int i : idx) q.push_back(terminals[i]);
      sets.push_back(std::move(q));
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == r - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  const int count = static_cast<int>(sets.size());
  std::vector<std::optional<Component>> solved(count);
  auto solve_one = [&](int i) {
    try {
      solved[i] = oracle.solve(sets[i], k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnreachable) throw;
    }
  };
  if (execution == Execution::kSerial) {
    for (int i = 0; i < count; ++i) solve_one(i);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < count; ++i) {
      try {
        solve_one(i);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  ColumnSet set;
  for (int i = 0; i < count; ++i) {
    if (!solved[i]) continue;
    const int index = static_cast<int>(set.components.size());
    for (NodeId s : solved[i]->terminals) set.columns.push_back({index, s});
    set.components.push_back(std::move(*solved[i]));
  }
  return set;
}

}  // namespace powertree
