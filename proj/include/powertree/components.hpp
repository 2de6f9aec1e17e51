#pragma once

#include <optional>
#include <vector>

#include "powertree/instance.hpp"
#include "powertree/parallel.hpp"
#include "powertree/path_power.hpp"

namespace powertree {

inline constexpr int kMaxComponentTerminals = 4;
inline constexpr std::size_t kMaxColumns = 50000;

struct Component {
  std::vector<NodeId> terminals;  // Q, sorted
  std::optional<NodeId> sink;
  std::vector<EdgeId> edges;      // sorted
  Units power_units = 0;
  Rational power;
};

// Min-power trees on small terminal sets of one instance. Construction builds
// the all-pairs dart table and, for every ordered node pair (x, y), the best
// interior cost of an x-y walk whose first edge costs at most x's threshold
// and whose last edge costs at most y's threshold, over all threshold pairs.
// solve() then enumerates branch-node sets A (nodes outside Q of degree >= 3,
// other terminals included, |A| <= |Q|-2) and labelled tree shapes on Q + A
// in which every A node has degree >= 3, and minimises over per-node power thresholds by a dynamic program on the shape.
// The argmin's walks are unioned, reduced to a tree spanning Q and stripped of
// non-terminal leaves; the result's power equals the program's optimum.
// Read-only after construction.
class ComponentOracle {
 public:
  explicit ComponentOracle(const Instance& instance);

  const Instance& instance() const { return instance_; }
  // Throws kInvalidArgument if Q has a non-terminal or |Q| > k_cap or
  // k_cap > 4, kUnreachable if Q cannot be connected.
  Component solve(std::vector<NodeId> terminals, int k_cap = kMaxComponentTerminals) const;

 private:
  Units best(NodeId x, NodeId y, int i, int j) const {
    return best_[offset_[static_cast<std::size_t>(x) * instance_.node_count() + y] +
                 static_cast<std::size_t>(i) * levels_[y].size() + j];
  }
  int level_of(NodeId v, Units cost) const;

  const Instance& instance_;
  DartTable darts_;
  std::vector<std::vector<Units>> levels_;  // distinct incident costs, ascending
  std::vector<std::size_t> offset_;
  std::vector<Units> best_;
};

Component min_power_component(const Instance& instance, std::vector<NodeId> terminals,
                              int k_cap = kMaxComponentTerminals);

struct Column {
  int component = 0;  // index into ColumnSet::components
  NodeId sink = 0;
};

// Columns for every terminal set Q with 2 <= |Q| <= k and every sink s in Q.
// Q are listed by size, then lexicographically; sinks ascending.
struct ColumnSet {
  std::vector<Component> components;
  std::vector<Column> columns;

  const Component& component_of(const Column& c) const { return components[c.component]; }
};

// Number of columns enumerate_columns would produce for r terminals.
std::size_t column_count(int terminal_count, int k);

// Throws kInvalidArgument unless 2 <= k <= 4 and kGuardExceeded if the column
// count exceeds 50,000. The parallel path solves distinct Q concurrently and
// yields the same output as the serial one.
ColumnSet enumerate_columns(const Instance& instance, int k,
                            Execution execution = Execution::kParallel);
ColumnSet enumerate_columns(const ComponentOracle& oracle, int k,
                            Execution execution = Execution::kParallel);

}  // namespace powertree
