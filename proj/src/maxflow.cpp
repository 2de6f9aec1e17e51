#include "powertree/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace powertree {

MaxFlow::MaxFlow(int nodes, double eps) : eps_(eps), out_(nodes), level_(nodes), cursor_(nodes) {}

int MaxFlow::add_arc(int from, int to, double capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0.0});
  out_[from].push_back(id);
  arcs_.push_back({from, 0.0, 0.0});
  out_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::levelize(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int a : out_[v]) {
      const int w = arcs_[a].to;
      if (level_[w] < 0 && residual(a) > eps_) {
        level_[w] = level_[v] + 1;
        queue.push(w);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlow::push(int v, int sink, double limit) {
  if (v == sink) return limit;
  for (int& i = cursor_[v]; i < static_cast<int>(out_[v].size()); ++i) {
    const int a = out_[v][i];
    const int w = arcs_[a].to;
    if (level_[w] != level_[v] + 1 || residual(a) <= eps_) continue;
    const double pushed = push(w, sink, std::min(limit, residual(a)));
    if (pushed > 0) {
      arcs_[a].flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

double MaxFlow::run(int source, int sink) {
  double total = 0;
  while (levelize(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (true) {
      const double pushed = push(source, sink, std::numeric_limits<double>::infinity());
      if (pushed <= 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a : out_[v]) {
      const int w = arcs_[a].to;
      if (!seen[w] && residual(a) > eps_) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace powertree
