#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powertree/components.hpp"
#include "powertree/errors.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/maxflow.hpp"
#include "powertree/reference_solvers.hpp"
#include "powertree/simplex.hpp"

using namespace powertree;
using fixture::make;

namespace {

// Row value of cut W computed directly from the column definitions.
double brute_row(const ColumnSet& cs, const std::vector<double>& x, const std::vector<NodeId>& w) {
  double total = 0;
  for (std::size_t c = 0; c < cs.columns.size(); ++c) {
    const Column& col = cs.columns[c];
    const auto& q = cs.component_of(col).terminals;
    const bool sink_inside = std::find(w.begin(), w.end(), col.sink) != w.end();
    bool meets = false;
    for (NodeId t : q) meets = meets || std::find(w.begin(), w.end(), t) != w.end();
    if (meets && !sink_inside) total += x[c];
  }
  return total;
}

// The LP over every cut row, solved exactly by vertex enumeration.
double full_row_lp(const Instance& g, const ColumnSet& cs) {
  std::vector<oracle::Exact> c;
  for (const Column& col : cs.columns) {
    const Rational p = cs.component_of(col).power;
    c.emplace_back(p.numerator(), p.denominator());
  }
  std::vector<std::vector<oracle::Exact>> a;
  std::vector<oracle::Exact> b;
  for (const auto& w : oracle::all_cut_sets(g)) {
    std::vector<oracle::Exact> row;
    for (std::size_t k = 0; k < cs.columns.size(); ++k) {
      std::vector<double> unit(cs.columns.size(), 0.0);
      unit[k] = 1.0;
      row.emplace_back(brute_row(cs, unit, w) > 0.5 ? 1 : 0);
    }
    a.push_back(row);
    b.emplace_back(1);
  }
  const auto best = oracle::vertex_enumeration_lp(c, a, b);
  REQUIRE(best);
  return best->convert_to<double>();
}

}  // namespace

TEST_CASE("simplex: one column, one row") {
  const LpSolution s = solve_linear_program({{6.0}, {{1.0}}, {1.0}});
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.objective == doctest::Approx(6.0));
}

TEST_CASE("simplex: mass goes to the cheaper of two equal columns") {
  const LpSolution s = solve_linear_program({{4.0, 6.0}, {{1.0, 1.0}}, {1.0}});
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(0.0));
  CHECK(s.objective == doctest::Approx(4.0));
}

TEST_CASE("simplex: infeasible program") {
  try {
    solve_linear_program({{1.0}, {{0.0}}, {1.0}});
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
  }
}

TEST_CASE("simplex agrees with vertex enumeration on random small programs") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const int m = 1 + static_cast<int>(uniform_below(rng, 6));
    LinearProgram lp;
    std::vector<oracle::Exact> c;
    std::vector<std::vector<oracle::Exact>> a;
    std::vector<oracle::Exact> b;
    for (int j = 0; j < n; ++j) {
      const int cost = 1 + static_cast<int>(uniform_below(rng, 9));
      lp.cost.push_back(cost);
      c.emplace_back(cost);
    }
    for (int i = 0; i < m; ++i) {
      std::vector<double> row(n);
      std::vector<oracle::Exact> exact(n);
      bool any = false;
      for (int j = 0; j < n; ++j) {
        const int v = static_cast<int>(uniform_below(rng, 3));
        row[j] = v;
        exact[j] = v;
        any = any || v > 0;
      }
      if (!any) {
        row[0] = 1;
        exact[0] = 1;
      }
      const int rhs = 1 + static_cast<int>(uniform_below(rng, 4));
      lp.rows.push_back(row);
      lp.rhs.push_back(rhs);
      a.push_back(exact);
      b.emplace_back(rhs);
    }
    const LpSolution s = solve_linear_program(lp);
    const auto best = oracle::vertex_enumeration_lp(c, a, b);
    REQUIRE(best);
    CHECK(s.objective == doctest::Approx(best->convert_to<double>()).epsilon(1e-9));
    for (int i = 0; i < m; ++i) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += lp.rows[i][j] * s.x[j];
      CHECK(lhs >= lp.rhs[i] - 1e-9);
    }
    // Same input, same pivots.
    CHECK(solve_linear_program(lp).pivots == s.pivots);
  }
}

TEST_CASE("max flow equals the brute-force minimum cut") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 5));
    std::vector<std::tuple<int, int, double>> arcs;
    MaxFlow flow(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && uniform_below(rng, 2) == 0) {
          const double cap = 0.25 * static_cast<double>(uniform_below(rng, 8));
          arcs.emplace_back(a, b, cap);
          flow.add_arc(a, b, cap);
        }
    const double value = flow.run(0, n - 1);
    double best = 1e18;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & 1u) || (mask >> (n - 1) & 1u)) continue;
      double cut = 0;
      for (auto [a, b, cap] : arcs)
        if ((mask >> a & 1u) && !(mask >> b & 1u)) cut += cap;
      best = std::min(best, cut);
    }
    CHECK(value == doctest::Approx(best));
    const auto side = flow.source_side(0);
    double cut = 0;
    for (auto [a, b, cap] : arcs)
      if (side[a] && !side[b]) cut += cap;
    CHECK(cut == doctest::Approx(best));
  }
}

TEST_CASE("two terminals joined by one edge") {
  const Instance g = make(2, {{0, 1, 3}}, {0, 1});
  const ColumnSet cs = enumerate_columns(g, 2);
  const LpState s = solve_lp(g, cs);
  CHECK(s.objective == doctest::Approx(6.0));
  REQUIRE(cs.columns.size() == 2);
  CHECK(cs.columns[0].sink == 0);
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK_FALSE(separate(g, cs, s.x, 1e-7).has_value());
}

TEST_CASE("unit star with three terminals matches the full-row LP") {
  const Instance g = make(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, {1, 2, 3});
  const ColumnSet cs = enumerate_columns(g, 3);
  const LpState s = solve_lp(g, cs);
  CHECK(s.objective <= 4.0 + 1e-9);
  CHECK(s.objective == doctest::Approx(full_row_lp(g, cs)).epsilon(1e-7));
}

TEST_CASE("zero-cost instance has objective zero") {
  const Instance g = make(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {0, 3, 0}}, {0, 1, 2, 3});
  const LpState s = solve_lp(g, enumerate_columns(g, 3));
  CHECK(s.objective == doctest::Approx(0.0));
}

TEST_CASE("separation with x = 0 returns the singleton of the first terminal") {
  const Instance g = fixture::random_graph(4, 7, 4);
  const ColumnSet cs = enumerate_columns(g, 3);
  const std::vector<double> x(cs.columns.size(), 0.0);
  const auto w = separate(g, cs, x, 1e-7);
  REQUIRE(w.has_value());
  NodeId first = -1;
  for (NodeId t : g.terminals())
    if (t != g.root()) {
      first = t;
      break;
    }
  CHECK(*w == std::vector<NodeId>{first});
}

TEST_CASE("separation agrees with exhaustive row checks") {
  Rng rng(12);
  int violated = 0, clean = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Instance g = fixture::random_graph(100 + trial, 7, 5);
    const ColumnSet cs = enumerate_columns(g, 3);
    std::vector<double> x(cs.columns.size());
    const double scale = 0.05 + 0.5 * uniform_unit(rng);
    for (double& v : x) v = scale * uniform_unit(rng);
    double least = 1e18;
    for (const auto& w : oracle::all_cut_sets(g)) {
      const double value = brute_row(cs, x, w);
      CHECK(row_value(cs, x, w) == doctest::Approx(value));
      least = std::min(least, value);
    }
    const double tol = 1e-7;
    const auto cut = separate(g, cs, x, tol);
    if (cut) {
      ++violated;
      CHECK(brute_row(cs, x, *cut) < 1 - tol);
    } else {
      ++clean;
      CHECK(least >= 1 - tol - 1e-9);
    }
    const auto flows_serial = terminal_flows(g, cs, x, Execution::kSerial);
    const auto flows_parallel = terminal_flows(g, cs, x, Execution::kParallel);
    CHECK(flows_serial == flows_parallel);
  }
  CHECK(violated > 0);
  CHECK(clean > 0);
}

TEST_CASE("cutting planes satisfy every row and never lose objective") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance g = fixture::random_graph(seed, 7, 5);
    const ColumnSet cs = enumerate_columns(g, 3);
    const LpState s = solve_lp(g, cs);
    for (double v : s.x) CHECK(v >= -1e-7);
    for (const auto& w : oracle::all_cut_sets(g)) CHECK(brute_row(cs, s.x, w) >= 1 - 1e-6);
    for (std::size_t i = 1; i < s.history.size(); ++i)
      CHECK(s.history[i] >= s.history[i - 1] - 1e-9);
    CHECK_FALSE(separate(g, cs, s.x, 1e-7).has_value());
    double weighted = 0;
    for (std::size_t c = 0; c < cs.columns.size(); ++c)
      weighted += to_double(cs.component_of(cs.columns[c]).power) * s.x[c];
    CHECK(weighted == doctest::Approx(s.objective));
    CHECK(s.rows.size() >= g.terminals().size() - 1);
  }
}

TEST_CASE("the relaxation lower-bounds the optimum when k covers every terminal") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int r = 2 + static_cast<int>(seed % 3);
    const Instance g = fixture::random_graph(seed, 6 + static_cast<int>(seed % 4), r);
    const LpState s = solve_lp(g, enumerate_columns(g, std::max(2, r)));
    CHECK(s.objective <= to_double(exact_min_power(g).total_power) + 1e-6);
  }
}

TEST_CASE("solve_lp argument checks") {
  const Instance g = make(2, {{0, 1, 3}}, {0, 1});
  const ColumnSet cs = enumerate_columns(g, 2);
  CHECK_THROWS_AS(solve_lp(g, cs, 0.0), Error);
  CHECK_THROWS_AS(solve_lp(g, cs, 1e-3), Error);
  try {
    solve_lp(g, ColumnSet{}, 1e-7);
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
  }
}
