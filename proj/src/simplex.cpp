#include "powertree/simplex.hpp"

#include <cmath>

#include "powertree/errors.hpp"

namespace powertree {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, double eps)
      : m_(static_cast<int>(lp.rows.size())),
        n_(static_cast<int>(lp.cost.size())),
        width_(n_ + 2 * m_ + 1),
        eps_(eps),
        cells_(static_cast<std::size_t>(m_ + 1) * width_, 0.0),
        basis_(m_) {
    for (int i = 0; i < m_; ++i) {
      const double sign = lp.rhs[i] < 0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) at(i, j) = sign * lp.rows[i][j];
      at(i, n_ + i) = -sign;
      at(i, n_ + m_ + i) = 1.0;
      at(i, width_ - 1) = sign * lp.rhs[i];
      basis_[i] = n_ + m_ + i;
    }
  }

  double& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * width_ + j]; }
  double at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * width_ + j]; }
  int rows() const { return m_; }
  int structural() const { return n_; }
  int artificial_begin() const { return n_ + m_; }
  int rhs() const { return width_ - 1; }
  int basis(int i) const { return basis_[i]; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j < width_; ++j) at(r, j) /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Bland's rule over columns [0, limit). Returns false at optimality.
  bool step(int limit, int max_pivots) {
    int enter = -1;
    for (int j = 0; j < limit; ++j) {
      if (at(m_, j) < -eps_) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    double best = 0;
    for (int i = 0; i < m_; ++i) {
      if (at(i, enter) <= eps_) continue;
      const double ratio = at(i, rhs()) / at(i, enter);
      if (leave < 0 || ratio < best - eps_) {
        best = ratio;
        leave = i;
      } else if (ratio <= best + eps_ && basis_[i] < basis_[leave]) {
        leave = i;
      }
    }
    if (leave < 0) throw Error(ErrorCode::kInternal, "linear program is unbounded");
    if (pivots_ >= max_pivots) throw Error(ErrorCode::kIterationCap, "simplex pivot cap reached");
    pivot(leave, enter);
    return true;
  }

  void set_objective(const std::vector<double>& cost) {
    for (int j = 0; j < width_; ++j) at(m_, j) = j < static_cast<int>(cost.size()) ? cost[j] : 0.0;
    for (int i = 0; i < m_; ++i) {
      const double cb = basis_[i] < static_cast<int>(cost.size()) ? cost[basis_[i]] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(m_, j) -= cb * at(i, j);
    }
  }

  int pivots() const { return pivots_; }

 private:
  int m_, n_, width_;
  double eps_;
  std::vector<double> cells_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

}  // namespace

LpSolution solve_linear_program(const LinearProgram& lp, double eps, int max_pivots) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = static_cast<int>(lp.cost.size());
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "row width does not match the column count");
    }
  }
  Tableau t(lp, eps);
  // Phase one: minimise the artificial sum.
  std::vector<double> phase_one(n + 2 * m, 0.0);
  for (int i = 0; i < m; ++i) phase_one[n + m + i] = 1.0;
  t.set_objective(phase_one);
  while (t.step(n + 2 * m, max_pivots)) {
  }
  double scale = 1.0;
  for (double b : lp.rhs) scale = std::max(scale, std::abs(b));
  if (-t.at(m, t.rhs()) > 1e-7 * scale) {
    throw Error(ErrorCode::kInfeasible, "linear program is infeasible");
  }
  // Drive artificials out of the basis where a real column can replace them.
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < t.artificial_begin()) continue;
    for (int j = 0; j < t.artificial_begin(); ++j) {
      if (std::abs(t.at(i, j)) > eps) {
        t.pivot(i, j);
        break;
      }
    }
  }
  t.set_objective(lp.cost);
  while (t.step(t.artificial_begin(), max_pivots)) {
  }
  LpSolution solution;
  solution.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < n) solution.x[t.basis(i)] = std::max(0.0, t.at(i, t.rhs()));
  }
  for (int j = 0; j < n; ++j) solution.objective += lp.cost[j] * solution.x[j];
  solution.pivots = t.pivots();
  return solution;
}

}  // namespace powertree
