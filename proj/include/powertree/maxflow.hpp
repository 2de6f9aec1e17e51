#pragma once

#include <vector>

namespace powertree {

// Dinic's algorithm on real capacities. Capacities below `eps` count as
// saturated when searching for augmenting paths and for the cut.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes, double eps = 1e-12);

  int add_arc(int from, int to, double capacity);
  double run(int source, int sink);
  // Nodes reachable from the source in the residual graph after run().
  std::vector<char> source_side(int source) const;
  double flow_on(int arc) const { return arcs_[arc].flow; }

 private:
  struct Arc {
    int to;
    double capacity;
    double flow;
  };
  bool levelize(int source, int sink);
  double push(int v, int sink, double limit);
  double residual(int a) const { return arcs_[a].capacity - arcs_[a].flow; }

  double eps_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_, cursor_;
};

}  // namespace powertree
