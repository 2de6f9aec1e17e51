#include "powertree/path_power.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "powertree/errors.hpp"

namespace powertree {

namespace {

struct Key {
  Units power = kInfiniteUnits;
  int hops = 0;
  auto operator<=>(const Key&) const = default;
};

}  // namespace

PathResult min_power_path(const Instance& instance, NodeId src, NodeId dst) {
  const int n = instance.node_count();
  if (src < 0 || src >= n || dst < 0 || dst >= n) {
    throw Error(ErrorCode::kNodeOutOfRange, "path endpoint out of range");
  }
  if (src == dst) {
    throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  }
  const int darts = 2 * instance.edge_count();
  auto tail = [&](int d) {
    const Edge& e = instance.edge(d / 2);
    return d % 2 == 0 ? e.u : e.v;
  };
  auto head = [&](int d) {
    const Edge& e = instance.edge(d / 2);
    return d % 2 == 0 ? e.v : e.u;
  };
  auto cost = [&](int d) { return instance.units(d / 2); };
  auto out_darts = [&](NodeId v) {
    std::vector<int> out;
    for (const Incidence& inc : instance.incident(v)) {
      out.push_back(2 * inc.edge + (instance.edge(inc.edge).u == v ? 0 : 1));
    }
    return out;
  };

  // rest[a]: best (power, hops) still to pay after arriving through dart a,
  // including the node a arrives at.
  std::vector<Key> rest(darts);
  std::vector<char> done(darts, 0);
  using Item = std::pair<Key, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const Incidence& inc : instance.incident(dst)) {
    const int d = 2 * inc.edge + (instance.edge(inc.edge).v == dst ? 0 : 1);
    rest[d] = {cost(d), 0};
    queue.push({rest[d], d});
  }
  while (!queue.empty()) {
    const auto [key, b] = queue.top();
    queue.pop();
    if (done[b] || key != rest[b]) continue;
    done[b] = 1;
    // Predecessor darts a end where b starts.
    for (const Incidence& inc : instance.incident(tail(b))) {
      const int a = 2 * inc.edge + (instance.edge(inc.edge).v == tail(b) ? 0 : 1);
      if (a == DartTable::reverse(b) || head(a) == dst) continue;
      const Key candidate{std::max(cost(a), cost(b)) + key.power, key.hops + 1};
      if (candidate < rest[a]) {
        rest[a] = candidate;
        queue.push({candidate, a});
      }
    }
  }

  Key best;
  int current = -1;
  for (int b : out_darts(src)) {
    if (!done[b]) continue;
    const Key total{cost(b) + rest[b].power, rest[b].hops + 1};
    if (total < best || (total == best && head(b) < head(current))) {
      best = total;
      current = b;
    }
  }
  if (current < 0) {
    throw Error(ErrorCode::kUnreachable,
                "node " + std::to_string(dst) + " unreachable from " + std::to_string(src));
  }
  PathResult result;
  result.nodes = {src, head(current)};
  result.edges = {DartTable::edge_of(current)};
  while (head(current) != dst) {
    int next = -1;
    for (int b : out_darts(head(current))) {
      if (b == DartTable::reverse(current) || !done[b]) continue;
      const Key via{std::max(cost(current), cost(b)) + rest[b].power, rest[b].hops + 1};
      if (via == rest[current] && (next < 0 || head(b) < head(next))) next = b;
    }
    if (next < 0) throw Error(ErrorCode::kInternal, "path reconstruction failed");
    current = next;
    result.nodes.push_back(head(current));
    result.edges.push_back(DartTable::edge_of(current));
  }
  result.power_units = best.power;
  result.power = instance.to_cost(best.power);
  return result;
}

Units path_power_units(const Instance& instance, const std::vector<NodeId>& nodes) {
  if (nodes.size() < 2) return 0;
  std::vector<Units> costs;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto e = instance.find_edge(nodes[i], nodes[i + 1]);
    if (!e) throw Error(ErrorCode::kInvalidArgument, "path nodes are not adjacent");
    costs.push_back(instance.units(*e));
  }
  Units total = costs.front() + costs.back();
  for (std::size_t i = 0; i + 1 < costs.size(); ++i) {
    total += std::max(costs[i], costs[i + 1]);
  }
  return total;
}

DartTable::DartTable(const Instance& instance) {
  const int darts = 2 * instance.edge_count();
  tail_.resize(darts);
  head_.resize(darts);
  cost_.resize(darts);
  out_.assign(instance.node_count(), {});
  in_.assign(instance.node_count(), {});
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    for (int dir = 0; dir < 2; ++dir) {
      const int d = 2 * e + dir;
      tail_[d] = dir == 0 ? edge.u : edge.v;
      head_[d] = dir == 0 ? edge.v : edge.u;
      cost_[d] = instance.units(e);
      out_[tail_[d]].push_back(d);
      in_[head_[d]].push_back(d);
    }
  }
  const auto size = static_cast<std::size_t>(darts) * static_cast<std::size_t>(darts);
  dist_.assign(size, kInfiniteUnits);
  pred_.assign(size, -1);
  using Item = std::pair<Units, int>;
  std::vector<char> done(darts);
  for (int first = 0; first < darts; ++first) {
    std::fill(done.begin(), done.end(), 0);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist_[index(first, first)] = 0;
    queue.push({0, first});
    while (!queue.empty()) {
      const auto [d, a] = queue.top();
      queue.pop();
      if (done[a]) continue;
      done[a] = 1;
      for (int b : out_[head_[a]]) {
        if (b == reverse(a)) continue;
        const Units candidate = d + std::max(cost_[a], cost_[b]);
        if (candidate < dist_[index(first, b)]) {
          dist_[index(first, b)] = candidate;
          pred_[index(first, b)] = a;
          queue.push({candidate, b});
        }
      }
    }
  }
}

std::vector<int> DartTable::walk(int first, int last) const {
  if (interior(first, last) >= kInfiniteUnits) {
    throw Error(ErrorCode::kUnreachable, "no walk between darts");
  }
  std::vector<int> darts{last};
  while (darts.back() != first) darts.push_back(pred_[index(first, darts.back())]);
  std::reverse(darts.begin(), darts.end());
  return darts;
}

}  // namespace powertree
