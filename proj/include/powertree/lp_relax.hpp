#pragma once

#include <optional>
#include <span>
#include <vector>

#include "powertree/components.hpp"
#include "powertree/parallel.hpp"

namespace powertree {

// Column (Q, s) enters the cut row of W iff Q meets W and s is outside W.
bool column_crosses(const ColumnSet& columns, const Column& column, std::span<const NodeId> cut);
double row_value(const ColumnSet& columns, std::span<const double> x, std::span<const NodeId> cut);

// Max-flow value from each non-root terminal to the root in the capacity
// network of x: a gadget node per column, arcs q -> gadget of unbounded
// capacity for every q in Q other than s, and gadget -> s of capacity x.
// Listed in terminal order, skipping the root.
std::vector<double> terminal_flows(const Instance& instance, const ColumnSet& columns,
                                   std::span<const double> x,
                                   Execution execution = Execution::kParallel);

// The terminal side (restricted to terminals) of a minimum cut for the
// terminal with the smallest flow, if that flow is below 1 - tol; ties go to
// the smaller terminal.
std::optional<std::vector<NodeId>> separate(const Instance& instance, const ColumnSet& columns,
                                            std::span<const double> x, double tol,
                                            Execution execution = Execution::kParallel);

struct LpState {
  std::vector<std::vector<NodeId>> rows;  // cut sets W, singletons first
  std::vector<double> x;                  // one value per column
  double objective = 0;
  std::vector<double> history;            // objective after each solve
  int rounds = 0;
};

// Cutting-plane loop: starts from the singleton rows of every non-root
// terminal, solves, adds the most violated cut found by separate(), and stops
// when none is left. Throws kInvalidArgument unless 0 < tol <= 1e-4,
// kInfeasible if some terminal is covered by no column and kIterationCap
// after max_rounds rounds.
LpState solve_lp(const Instance& instance, const ColumnSet& columns, double tol = 1e-7,
                 Execution execution = Execution::kParallel, int max_rounds = 5000);

}  // namespace powertree
