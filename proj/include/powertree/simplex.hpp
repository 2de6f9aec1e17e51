#pragma once

#include <vector>

namespace powertree {

// minimize cost . x  subject to  rows[i] . x >= rhs[i],  x >= 0.
struct LinearProgram {
  std::vector<double> cost;
  std::vector<std::vector<double>> rows;  // dense, each of size cost.size()
  std::vector<double> rhs;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0;
  int pivots = 0;
};

// Dense two-phase tableau simplex with Bland's rule, so the pivot sequence is
// a deterministic function of the input order. Throws kInfeasible,
// kIterationCap after max_pivots, or kInternal if the objective is
// unbounded below.
LpSolution solve_linear_program(const LinearProgram& lp, double eps = 1e-9,
                                int max_pivots = 200000);

}  // namespace powertree
