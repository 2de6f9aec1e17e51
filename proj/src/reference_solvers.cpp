#include "powertree/reference_solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <tuple>

#include "powertree/errors.hpp"
#include "powertree/subgraph.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

namespace {

constexpr Units kInf = std::numeric_limits<Units>::max() / 4;

Units add(Units a, Units b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

// Include/exclude search over the spanning trees of one induced subgraph.
class SpanningSearch {
 public:
  SpanningSearch(const Instance& instance, const std::vector<char>& inside,
                 std::vector<EdgeId> edges, Units global_best)
      : instance_(instance), inside_(inside), edges_(std::move(edges)), global_best_(global_best) {
    const int n = instance.node_count();
    for (NodeId v = 0; v < n; ++v) {
      if (inside_[v]) {
        members_.push_back(v);
      }
    }
    // open_min_[p][v]: cheapest edge at v among edges_[p..].
    open_min_.assign(edges_.size() + 1, std::vector<Units>(n, kInf));
    for (int p = static_cast<int>(edges_.size()) - 1; p >= 0; --p) {
      open_min_[p] = open_min_[p + 1];
      const Edge& e = instance.edge(edges_[p]);
      open_min_[p][e.u] = std::min(open_min_[p][e.u], instance.units(edges_[p]));
      open_min_[p][e.v] = std::min(open_min_[p][e.v], instance.units(edges_[p]));
    }
    max_.assign(n, 0);
    degree_.assign(n, 0);
    label_.resize(n);
    for (NodeId v = 0; v < n; ++v) label_[v] = v;
  }

  void run() {
    if (members_.size() < 2) return;
    recurse(0);
  }

  Units best() const { return best_; }
  const std::vector<EdgeId>& best_edges() const { return best_edges_; }

 private:
  Units lower_bound(std::size_t pos) const {
    Units total = 0;
    for (NodeId v : members_) {
      if (degree_[v] > 0) {
        total += max_[v];
      } else {
        total = add(total, open_min_[pos][v]);
      }
    }
    return total;
  }

  bool still_connectable(std::size_t pos) const {
    UnionFind uf(instance_.node_count());
    for (EdgeId e : chosen_) uf.unite(instance_.edge(e).u, instance_.edge(e).v);
    for (std::size_t p = pos; p < edges_.size(); ++p) {
      uf.unite(instance_.edge(edges_[p]).u, instance_.edge(edges_[p]).v);
    }
    for (NodeId v : members_) {
      if (!uf.same(v, members_.front())) return false;
    }
    return true;
  }

  void recurse(std::size_t pos) {
    const Units bound = lower_bound(pos);
    if (bound > global_best_ || bound >= best_) return;
    if (chosen_.size() + 1 == members_.size()) {
      for (NodeId v : members_) {
        if (!instance_.is_terminal(v) && degree_[v] < 2) return;
      }
      best_ = bound;
      best_edges_ = chosen_;
      return;
    }
    if (pos == edges_.size()) return;
    const EdgeId e = edges_[pos];
    const NodeId u = instance_.edge(e).u;
    const NodeId v = instance_.edge(e).v;
    const int lu = label_[u];
    const int lv = label_[v];
    if (lu != lv) {
      const Units saved_u = max_[u];
      const Units saved_v = max_[v];
      const std::vector<int> saved_labels = label_;
      for (int& l : label_) {
        if (l == lv) l = lu;
      }
      max_[u] = std::max(max_[u], instance_.units(e));
      max_[v] = std::max(max_[v], instance_.units(e));
      ++degree_[u];
      ++degree_[v];
      chosen_.push_back(e);
      recurse(pos + 1);
      chosen_.pop_back();
      --degree_[u];
      --degree_[v];
      max_[u] = saved_u;
      max_[v] = saved_v;
      label_ = saved_labels;
    }
    if (still_connectable(pos + 1)) recurse(pos + 1);
  }

  const Instance& instance_;
  const std::vector<char>& inside_;
  std::vector<EdgeId> edges_;
  Units global_best_;
  std::vector<NodeId> members_;
  std::vector<std::vector<Units>> open_min_;
  std::vector<Units> max_;
  std::vector<int> degree_;
  std::vector<int> label_;
  std::vector<EdgeId> chosen_;
  Units best_ = kInf;
  std::vector<EdgeId> best_edges_;
};

std::vector<Units> distinct_costs(const Instance& instance, NodeId v) {
  std::vector<Units> levels;
  for (const Incidence& inc : instance.incident(v)) levels.push_back(instance.units(inc.edge));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

struct Back {
  enum Kind : char { kNone, kBase, kMerge, kExtend, kInherit } kind = kNone;
  int from = 0;  // submask for merges, state for extend/inherit
  EdgeId edge = -1;
};

PowerTree finish_tree(const Instance& instance, const std::vector<EdgeId>& edges) {
  return evaluate(instance, subtree_spanning(instance, edges, instance.terminals()));
}

}  // namespace

PowerTree exact_min_power(const Instance& original, TreeMode mode) {
  const Instance instance = mode == TreeMode::kSpanning ? original.as_spanning() : original;
  if (instance.node_count() > kExactNodeLimit) {
    throw Error(ErrorCode::kGuardExceeded, "exact solver is limited to 12 nodes");
  }
  if (instance.terminals().size() == 1) return evaluate(instance, {});
  std::vector<NodeId> steiner;
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    if (!instance.is_terminal(v)) steiner.push_back(v);
  }
  Units best = kInf;
  std::vector<EdgeId> best_edges;
  for (std::uint32_t mask = 0; mask < (1u << steiner.size()); ++mask) {
    std::vector<char> inside(instance.node_count(), 0);
    for (NodeId t : instance.terminals()) inside[t] = 1;
    for (std::size_t i = 0; i < steiner.size(); ++i) {
      if (mask >> i & 1u) inside[steiner[i]] = 1;
    }
    std::vector<EdgeId> induced;
    for (EdgeId e = 0; e < instance.edge_count(); ++e) {
      if (inside[instance.edge(e).u] && inside[instance.edge(e).v]) induced.push_back(e);
    }
    SpanningSearch search(instance, inside, std::move(induced), best);
    search.run();
    if (search.best() < best ||
        (search.best() == best && search.best_edges() < best_edges)) {
      best = search.best();
      best_edges = search.best_edges();
    }
  }
  if (best >= kInf) throw Error(ErrorCode::kDisconnectedTerminals, "terminals cannot be connected");
  std::sort(best_edges.begin(), best_edges.end());
  return evaluate(instance, best_edges);
}

PowerTree exact_min_power_dp(const Instance& instance) {
  const auto& terminals = instance.terminals();
  const int r = static_cast<int>(terminals.size());
  if (r > kExactTerminalLimit) {
    throw Error(ErrorCode::kGuardExceeded, "power dynamic program is limited to 12 terminals");
  }
  if (r == 1) return evaluate(instance, {});
  const int n = instance.node_count();
  std::vector<std::vector<Units>> levels(n);
  std::vector<int> base(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    levels[v] = distinct_costs(instance, v);
    base[v + 1] = base[v] + static_cast<int>(levels[v].size());
  }
  const int states = base[n];
  std::vector<NodeId> node_of(states);
  for (NodeId v = 0; v < n; ++v) {
    for (int s = base[v]; s < base[v + 1]; ++s) node_of[s] = v;
  }
  auto state_for = [&](NodeId v, Units cost) {
    return base[v] + static_cast<int>(std::lower_bound(levels[v].begin(), levels[v].end(), cost) -
                                      levels[v].begin());
  };
  auto threshold = [&](int s) { return levels[node_of[s]][s - base[node_of[s]]]; };

  const std::uint32_t full = (1u << r) - 1;
  std::vector<std::vector<Units>> g(full + 1);
  std::vector<std::vector<Back>> back(full + 1);
  using Item = std::pair<Units, int>;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    auto& value = g[mask];
    auto& how = back[mask];
    value.assign(states, kInf);
    how.assign(states, {});
    if (std::has_single_bit(mask)) {
      const NodeId t = terminals[std::countr_zero(mask)];
      for (int s = base[t]; s < base[t + 1]; ++s) {
        value[s] = 0;
        how[s] = {Back::kBase, 0, -1};
      }
    } else {
      const std::uint32_t low = mask & (~mask + 1);
      for (std::uint32_t part = (mask - 1) & mask; part > 0; part = (part - 1) & mask) {
        if (!(part & low)) continue;
        const auto& a = g[part];
        const auto& b = g[mask ^ part];
        for (int s = 0; s < states; ++s) {
          const Units total = add(a[s], b[s]);
          if (total < value[s]) {
            value[s] = total;
            how[s] = {Back::kMerge, static_cast<int>(part), -1};
          }
        }
      }
    }
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (int s = 0; s < states; ++s) {
      if (value[s] < kInf) queue.push({value[s], s});
    }
    while (!queue.empty()) {
      const auto [d, s] = queue.top();
      queue.pop();
      if (d != value[s]) continue;
      const NodeId w = node_of[s];
      if (s + 1 < base[w + 1] && d < value[s + 1]) {
        value[s + 1] = d;
        how[s + 1] = {Back::kInherit, s, -1};
        queue.push({d, s + 1});
      }
      for (const Incidence& inc : instance.incident(w)) {
        const Units c = instance.units(inc.edge);
        const int target = state_for(inc.to, c);
        const Units candidate = d + std::max(c, threshold(s));
        if (candidate < value[target]) {
          value[target] = candidate;
          how[target] = {Back::kExtend, s, inc.edge};
          queue.push({candidate, target});
        }
      }
    }
  }

  const NodeId root = instance.root();
  Units best = kInf;
  int best_state = -1;
  for (int s = base[root]; s < base[root + 1]; ++s) {
    const Units total = add(threshold(s), g[full][s]);
    if (total < best) {
      best = total;
      best_state = s;
    }
  }
  if (best_state < 0) throw Error(ErrorCode::kDisconnectedTerminals, "terminals cannot be connected");
  std::vector<EdgeId> edges;
  std::vector<std::pair<std::uint32_t, int>> stack{{full, best_state}};
  while (!stack.empty()) {
    const auto [mask, s] = stack.back();
    stack.pop_back();
    const Back& b = back[mask][s];
    switch (b.kind) {
      case Back::kMerge:
        stack.push_back({static_cast<std::uint32_t>(b.from), s});
        stack.push_back({mask ^ static_cast<std::uint32_t>(b.from), s});
        break;
      case Back::kExtend:
        edges.push_back(b.edge);
        stack.push_back({mask, b.from});
        break;
      case Back::kInherit:
        stack.push_back({mask, b.from});
        break;
      default:
        break;
    }
  }
  PowerTree tree = finish_tree(instance, edges);
  if (power_units(instance, tree.edges) != best) {
    throw Error(ErrorCode::kInternal, "power dynamic program reconstruction mismatch");
  }
  return tree;
}

PowerTree min_spanning_tree(const Instance& instance) {
  std::vector<EdgeId> order(instance.edge_count());
  for (EdgeId e = 0; e < instance.edge_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return instance.units(a) < instance.units(b); });
  UnionFind uf(instance.node_count());
  std::vector<EdgeId> chosen;
  for (EdgeId e : order) {
    if (uf.unite(instance.edge(e).u, instance.edge(e).v)) chosen.push_back(e);
  }
  std::erase_if(chosen, [&](EdgeId e) { return !uf.same(instance.edge(e).u, instance.root()); });
  return evaluate(instance, strip_optional_leaves(instance, std::move(chosen), instance.terminals()));
}

PowerTree exact_min_cost_steiner(const Instance& instance) {
  const auto& terminals = instance.terminals();
  const int r = static_cast<int>(terminals.size());
  if (r > kExactTerminalLimit) {
    throw Error(ErrorCode::kGuardExceeded, "exact min-cost tree is limited to 12 terminals");
  }
  if (r == 1) return evaluate(instance, {});
  const int n = instance.node_count();
  const std::uint32_t full = (1u << r) - 1;
  std::vector<std::vector<Units>> dp(full + 1, std::vector<Units>(n, kInf));
  std::vector<std::vector<Back>> back(full + 1, std::vector<Back>(n));
  using Item = std::pair<Units, int>;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    auto& value = dp[mask];
    auto& how = back[mask];
    if (std::has_single_bit(mask)) {
      const NodeId t = terminals[std::countr_zero(mask)];
      value[t] = 0;
      how[t] = {Back::kBase, 0, -1};
    } else {
      const std::uint32_t low = mask & (~mask + 1);
      for (std::uint32_t part = (mask - 1) & mask; part > 0; part = (part - 1) & mask) {
        if (!(part & low)) continue;
        for (NodeId v = 0; v < n; ++v) {
          const Units total = add(dp[part][v], dp[mask ^ part][v]);
          if (total < value[v]) {
            value[v] = total;
            how[v] = {Back::kMerge, static_cast<int>(part), -1};
          }
        }
      }
    }
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (NodeId v = 0; v < n; ++v) {
      if (value[v] < kInf) queue.push({value[v], v});
    }
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d != value[v]) continue;
      for (const Incidence& inc : instance.incident(v)) {
        const Units candidate = d + instance.units(inc.edge);
        if (candidate < value[inc.to]) {
          value[inc.to] = candidate;
          how[inc.to] = {Back::kExtend, v, inc.edge};
          queue.push({candidate, inc.to});
        }
      }
    }
  }
  const NodeId root = instance.root();
  if (dp[full][root] >= kInf) {
    throw Error(ErrorCode::kDisconnectedTerminals, "terminals cannot be connected");
  }
  std::vector<EdgeId> edges;
  std::vector<std::pair<std::uint32_t, int>> stack{{full, root}};
  while (!stack.empty()) {
    const auto [mask, v] = stack.back();
    stack.pop_back();
    const Back& b = back[mask][v];
    if (b.kind == Back::kMerge) {
      stack.push_back({static_cast<std::uint32_t>(b.from), v});
      stack.push_back({mask ^ static_cast<std::uint32_t>(b.from), v});
    } else if (b.kind == Back::kExtend) {
      edges.push_back(b.edge);
      stack.push_back({mask, b.from});
    }
  }
  PowerTree tree = finish_tree(instance, edges);
  if (cost_units(instance, tree.edges) != dp[full][root]) {
    throw Error(ErrorCode::kInternal, "min-cost reconstruction mismatch");
  }
  return tree;
}

PowerTree metric_closure_steiner(const Instance& instance) {
  const auto& terminals = instance.terminals();
  const int n = instance.node_count();
  const int r = static_cast<int>(terminals.size());
  if (r == 1) return evaluate(instance, {});
  std::vector<std::vector<Units>> dist(r, std::vector<Units>(n, kInf));
  std::vector<std::vector<EdgeId>> via(r, std::vector<EdgeId>(n, -1));
  using Item = std::pair<Units, int>;
  for (int i = 0; i < r; ++i) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[i][terminals[i]] = 0;
    queue.push({0, terminals[i]});
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d != dist[i][v]) continue;
      for (const Incidence& inc : instance.incident(v)) {
        const Units candidate = d + instance.units(inc.edge);
        if (candidate < dist[i][inc.to]) {
          dist[i][inc.to] = candidate;
          via[i][inc.to] = inc.edge;
          queue.push({candidate, inc.to});
        }
      }
    }
  }
  std::vector<std::tuple<Units, int, int>> pairs;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) pairs.emplace_back(dist[i][terminals[j]], i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  UnionFind uf(r);
  std::vector<EdgeId> edges;
  for (const auto& [d, i, j] : pairs) {
    if (d >= kInf || !uf.unite(i, j)) continue;
    for (NodeId v = terminals[j]; v != terminals[i];) {
      const EdgeId e = via[i][v];
      edges.push_back(e);
      v = instance.edge(e).other(v);
    }
  }
  // Cheapest spanning forest of the union keeps the cost bound.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::stable_sort(edges.begin(), edges.end(),
                   [&](EdgeId a, EdgeId b) { return instance.units(a) < instance.units(b); });
  UnionFind forest(n);
  std::vector<EdgeId> chosen;
  for (EdgeId e : edges) {
    if (forest.unite(instance.edge(e).u, instance.edge(e).v)) chosen.push_back(e);
  }
  return evaluate(instance, strip_optional_leaves(instance, std::move(chosen), terminals));
}

PowerTree baseline_min_cost(const Instance& instance, TreeMode mode, bool allow_fallback) {
  if (mode == TreeMode::kSpanning) return min_spanning_tree(instance.as_spanning());
  if (static_cast<int>(instance.terminals().size()) <= kExactTerminalLimit) {
    return exact_min_cost_steiner(instance);
  }
  if (!allow_fallback) {
    throw Error(ErrorCode::kGuardExceeded, "exact min-cost tree is limited to 12 terminals");
  }
  return metric_closure_steiner(instance);
}

}  // namespace powertree
