#pragma once

#include <limits>
#include <vector>

#include "powertree/instance.hpp"

namespace powertree {

inline constexpr Units kInfiniteUnits = std::numeric_limits<Units>::max() / 4;

struct PathResult {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  Rational power;
  Units power_units = 0;
};

// Minimum-power src-dst path. Shortest-path search over states "arrived at a
// node through a given edge"; the step from (v, a) along an edge of cost b
// pays max(a, b) for v, the source pays its first edge and the destination
// its last. Ties go to fewer edges, then to the lexicographically smallest
// node sequence. Throws kInvalidArgument when src == dst and kUnreachable
// when dst cannot be reached.
PathResult min_power_path(const Instance& instance, NodeId src, NodeId dst);

// Power of the path through the given node sequence (consecutive nodes must
// be adjacent).
Units path_power_units(const Instance& instance, const std::vector<NodeId>& nodes);

// All-pairs table over darts (directed edge copies; dart 2e runs u->v along
// edge e, dart 2e+1 runs v->u). interior(first, last) is the least total
// power paid by the internal nodes of a walk that leaves through `first` and
// arrives through `last`, where each internal node pays the max of its two
// walk edges. interior(d, d) == 0.
class DartTable {
 public:
  explicit DartTable(const Instance& instance);

  int dart_count() const { return static_cast<int>(tail_.size()); }
  NodeId tail(int d) const { return tail_[d]; }
  NodeId head(int d) const { return head_[d]; }
  Units cost(int d) const { return cost_[d]; }
  static EdgeId edge_of(int d) { return d / 2; }
  static int reverse(int d) { return d ^ 1; }
  const std::vector<int>& out_darts(NodeId v) const { return out_[v]; }
  const std::vector<int>& in_darts(NodeId v) const { return in_[v]; }

  Units interior(int first, int last) const { return dist_[index(first, last)]; }
  // Darts of an optimal walk, first..last inclusive.
  std::vector<int> walk(int first, int last) const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * tail_.size() + static_cast<std::size_t>(b);
  }

  std::vector<NodeId> tail_, head_;
  std::vector<Units> cost_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<Units> dist_;
  std::vector<int> pred_;
};

}  // namespace powertree
