#include "powertree/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "powertree/errors.hpp"

namespace powertree {

BigRational harmonic(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "harmonic index must be non-negative");
  BigRational total = 0;
  for (int k = 1; k <= n; ++k) total += BigRational(1, k);
  return total;
}

BigRational delta_spanning(const BigRational& m, int i) {
  if (i < 1) throw Error(ErrorCode::kInvalidArgument, "delta index must be at least 1");
  return m * harmonic(i);
}

double delta_steiner(double m, int i) {
  if (i < 1) throw Error(ErrorCode::kInvalidArgument, "delta index must be at least 1");
  long double h = 0;
  for (int k = 1; k <= i; ++k) h += 1.0L / k;
  const long double head = h / std::ldexp(1.0L, i);
  long double series = 0;
  long double weight = 1;
  for (int q = 1;; ++q) {
    h += 1.0L / (q + i);
    weight /= 2;
    series += h * weight;
    if ((h + 2) * weight < 1e-12L) break;
  }
  const long double tail_share = 1 - 1 / std::ldexp(1.0L, i);
  return static_cast<double>(m * (head + tail_share * series));
}

DeltaPropertyReport check_delta_properties(DeltaKind kind, int i_max, double m) {
  if (i_max < 1 || i_max > 50) throw Error(ErrorCode::kInvalidArgument, "i_max must be in [1, 50]");
  DeltaPropertyReport report;
  report.values.assign(i_max + 2, 0.0);
  for (int i = 1; i <= i_max + 1; ++i) {
    report.values[i] = kind == DeltaKind::kSpanning
                           ? m * static_cast<double>(harmonic(i))
                           : delta_steiner(m, i);
  }
  const double tol = 1e-9 * m;
  const auto& d = report.values;
  for (int i = 1; i <= i_max; ++i) {
    if (d[i] > d[i + 1] + tol) {
      report.increasing = false;
      if (!report.first_violation) report.first_violation = i;
    }
    if (i >= 2 && d[i] - d[i - 1] + tol < d[i + 1] - d[i]) {
      report.diminishing = false;
      if (!report.first_violation) report.first_violation = i;
    }
  }
  return report;
}

EdgeClassification classify_edges(const Tree& tree) {
  std::vector<int> designations(tree.edge_count(), 0);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    int pick = -1;
    for (const Incidence& inc : tree.incident(v)) {
      const Units c = tree.edge(inc.edge).cost;
      if (pick < 0 || c > tree.edge(pick).cost || (c == tree.edge(pick).cost && inc.edge < pick)) {
        pick = inc.edge;
      }
    }
    if (pick >= 0) ++designations[pick];
  }
  EdgeClassification result;
  Units heavy_cost = 0, middle_cost = 0;
  for (int e = 0; e < tree.edge_count(); ++e) {
    switch (designations[e]) {
      case 2:
        result.heavy.push_back(e);
        heavy_cost += tree.edge(e).cost;
        break;
      case 1:
        result.middle.push_back(e);
        middle_cost += tree.edge(e).cost;
        break;
      default:
        result.light.push_back(e);
    }
  }
  const Units total = tree.cost();
  if (total == 0) {
    result.gamma_heavy = Rational(1, 2);
    result.gamma_middle = 0;
  } else {
    result.gamma_heavy = Rational(heavy_cost, total);
    result.gamma_middle = Rational(middle_cost, total);
  }
  result.alpha = 2 * result.gamma_heavy + result.gamma_middle;
  return result;
}

EdgeClassification classify_edges(const Instance& instance, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  EdgeClassification result = classify_edges(Tree::from_instance(instance, sorted));
  for (auto* list : {&result.heavy, &result.middle, &result.light}) {
    for (int& e : *list) e = sorted[e];
    std::sort(list->begin(), list->end());
  }
  return result;
}

double theoretical_factor(TreeMode mode) {
  return mode == TreeMode::kSpanning ? 1.5 : delta_steiner(1.0, 2);
}

}  // namespace powertree
