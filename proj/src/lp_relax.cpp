#include "powertree/lp_relax.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "powertree/errors.hpp"
#include "powertree/maxflow.hpp"
#include "powertree/simplex.hpp"

namespace powertree {

namespace {

bool contains(std::span<const NodeId> sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Node layout: terminals by position in instance.terminals(), then gadgets.
struct FlowNetwork {
  MaxFlow flow;
  int root = 0;
};

FlowNetwork build_network(const Instance& instance, const ColumnSet& columns,
                          std::span<const double> x) {
  const auto& terminals = instance.terminals();
  const int r = static_cast<int>(terminals.size());
  auto position = [&](NodeId t) {
    return static_cast<int>(std::lower_bound(terminals.begin(), terminals.end(), t) -
                            terminals.begin());
  };
  FlowNetwork net{MaxFlow(r + static_cast<int>(columns.columns.size())),
                  position(instance.root())};
  const double unbounded = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < columns.columns.size(); ++c) {
    const Column& column = columns.columns[c];
    const int gadget = r + static_cast<int>(c);
    for (NodeId q : columns.component_of(column).terminals) {
      if (q != column.sink) net.flow.add_arc(position(q), gadget, unbounded);
    }
    net.flow.add_arc(gadget, position(column.sink), std::max(0.0, x[c]));
  }
  return net;
}

}  // namespace

bool column_crosses(const ColumnSet& columns, const Column& column, std::span<const NodeId> cut) {
  if (contains(cut, column.sink)) return false;
  for (NodeId q : columns.component_of(column).terminals) {
    if (contains(cut, q)) return true;
  }
  return false;
}

double row_value(const ColumnSet& columns, std::span<const double> x, std::span<const NodeId> cut) {
  double total = 0;
  for (std::size_t c = 0; c < columns.columns.size(); ++c) {
    if (column_crosses(columns, columns.columns[c], cut)) total += x[c];
  }
  return total;
}

std::vector<double> terminal_flows(const Instance& instance, const ColumnSet& columns,
                                   std::span<const double> x, Execution execution) {
  const FlowNetwork base = build_network(instance, columns, x);
  const int r = static_cast<int>(instance.terminals().size());
  std::vector<double> flows(r, 0.0);
  auto one = [&](int t) {
    MaxFlow net = base.flow;
    flows[t] = net.run(t, base.root);
  };
  if (execution == Execution::kSerial) {
    for (int t = 0; t < r; ++t) {
      if (t != base.root) one(t);
    }
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int t = 0; t < r; ++t) {
      if (t != base.root) one(t);
    }
  }
  flows.erase(flows.begin() + base.root);
  return flows;
}

std::optional<std::vector<NodeId>> separate(const Instance& instance, const ColumnSet& columns,
                                            std::span<const double> x, double tol,
                                            Execution execution) {
  const auto& terminals = instance.terminals();
  const std::vector<double> flows = terminal_flows(instance, columns, x, execution);
  int worst = -1;
  for (int i = 0; i < static_cast<int>(flows.size()); ++i) {
    if (flows[i] < 1.0 - tol && (worst < 0 || flows[i] < flows[worst])) worst = i;
  }
  if (worst < 0) return std::nullopt;
  FlowNetwork net = build_network(instance, columns, x);
  const int source = worst >= net.root ? worst + 1 : worst;
  net.flow.run(source, net.root);
  const std::vector<char> side = net.flow.source_side(source);
  std::vector<NodeId> cut;
  for (int i = 0; i < static_cast<int>(terminals.size()); ++i) {
    if (side[i]) cut.push_back(terminals[i]);
  }
  return cut;
}

LpState solve_lp(const Instance& instance, const ColumnSet& columns, double tol,
                 Execution execution, int max_rounds) {
  if (!(tol > 0 && tol <= 1e-4)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must lie in (0, 1e-4]");
  }
  LpState state;
  const std::size_t n = columns.columns.size();
  state.x.assign(n, 0.0);
  std::vector<double> cost(n);
  for (std::size_t c = 0; c < n; ++c) cost[c] = to_double(columns.component_of(columns.columns[c]).power);
  for (NodeId t : instance.terminals()) {
    if (t == instance.root()) continue;
    state.rows.push_back({t});
    bool covered = false;
    for (const Column& column : columns.columns) covered = covered || column_crosses(columns, column, state.rows.back());
    if (!covered) {
      throw Error(ErrorCode::kInfeasible, "terminal " + std::to_string(t) + " is covered by no column");
    }
  }
  if (state.rows.empty()) {
    state.history.push_back(0.0);
    return state;
  }
  LinearProgram lp;
  lp.cost = cost;
  auto add_row = [&](const std::vector<NodeId>& cut) {
    std::vector<double> row(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) row[c] = column_crosses(columns, columns.columns[c], cut) ? 1.0 : 0.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1.0);
  };
  for (const auto& cut : state.rows) add_row(cut);
  while (true) {
    if (state.rounds >= max_rounds) {
      throw Error(ErrorCode::kIterationCap, "cutting-plane round cap reached");
    }
    ++state.rounds;
    const LpSolution solution = solve_linear_program(lp);
    state.x = solution.x;
    state.objective = solution.objective;
    state.history.push_back(solution.objective);
    auto cut = separate(instance, columns, state.x, tol, execution);
    if (!cut) break;
    if (std::find(state.rows.begin(), state.rows.end(), *cut) != state.rows.end()) {
      throw Error(ErrorCode::kInternal, "separation returned a row already in the program");
    }
    add_row(*cut);
    state.rows.push_back(std::move(*cut));
  }
  return state;
}

}  // namespace powertree
