// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero on any
// failure. Every run is seeded, so the verdicts are reproducible.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powertree/analysis.hpp"
#include "powertree/components.hpp"
#include "powertree/decomposition.hpp"
#include "powertree/irr_solver.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/path_power.hpp"
#include "powertree/reference_solvers.hpp"
#include "powertree/witness.hpp"

using namespace powertree;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Instances shared by the IRR criteria and the baseline criterion.
struct RatioSuite {
  std::vector<Instance> instances;
  std::vector<Rational> optimum;
  std::vector<Rational> baseline;
};

RatioSuite spanning_suite, steiner_suite;

Instance suite_instance(std::uint64_t seed, int nodes, int terminals, bool two_level) {
  GeneratorParams p;
  p.nodes = nodes;
  p.terminals = terminals;
  p.seed = seed;
  p.max_cost = 10;
  p.density = 0.35;
  p.low = 1;
  p.high = 4;
  return generate(two_level ? GeneratorKind::kTwoLevel : GeneratorKind::kUniformRandom, p);
}

void eq1_on_random_trees(Verdict& v) {
  Rng rng(1001);
  for (int t = 0; t < 1000; ++t) {
    const Instance g = random_tree_instance(rng, 2 + t % 30);
    const PowerTree p = evaluate(g, fixture::all_edges(g));
    v.require(p.total_cost <= p.total_power && p.total_power <= 2 * p.total_cost,
              "tree " + std::to_string(t));
  }
  v.detail << "1000 trees";
}

void reduction_fidelity(Verdict& v) {
  for (std::uint64_t s = 1; s <= 100; ++s) {
    const int nodes = 3 + static_cast<int>(s % 6);
    const Instance g = fixture::random_graph(2000 + s, nodes, 2 + static_cast<int>(s % (nodes - 1)), 9);
    const Rational min_cost = exact_min_cost_steiner(g).total_cost;
    const auto brute = oracle::brute_min_cost_tree(g, g.terminals());
    const Rational reduced = exact_min_power_dp(reduce_cost_to_power(g)).total_power;
    v.require(brute && brute->value == min_cost, "min-cost oracle, seed " + std::to_string(s));
    v.require(reduced == min_cost, "reduced power, seed " + std::to_string(s));
  }
  v.detail << "100 instances";
}

void path_oracle(Verdict& v) {
  int pairs = 0;
  for (std::uint64_t s = 1; s <= 200; ++s) {
    const int nodes = 2 + static_cast<int>(s % 6);
    const Instance g = fixture::random_graph(3000 + s, nodes, 1, 5, 0.5);
    for (NodeId a = 0; a < nodes; ++a) {
      for (NodeId b = 0; b < nodes; ++b) {
        if (a == b) continue;
        const PathResult r = min_power_path(g, a, b);
        const auto want = oracle::brute_path_power(g, a, b);
        v.require(want && r.power == *want, "graph " + std::to_string(s));
        v.require(oracle::edge_set_power(g, r.edges) == r.power, "path power evaluation");
        ++pairs;
      }
    }
  }
  v.detail << "200 graphs, " << pairs << " ordered pairs";
}

void bounded_degree_bound(Verdict& v) {
  Rng rng(4004);
  for (int t = 0; t < 500; ++t) {
    const Tree tree = random_full_component(rng, 4 + static_cast<int>(uniform_below(rng, 40)), 3,
                                            3 + static_cast<int>(uniform_below(rng, 6)), 20);
    for (int delta : {3, 4, 5}) {
      const Decomposition d = bounded_degree_decompose(tree, delta);
      const Units half = (delta + 1) / 2;
      const std::string where = "component " + std::to_string(t) + ", delta " + std::to_string(delta);
      v.require(d.total_power * (half - 1) <= (half + 1) * tree.power(), "power bound at " + where);
      for (const Part& p : d.parts) v.require(max_part_degree(tree, p) <= delta, "degree at " + where);
      v.require(component_graph(d).is_tree, "component graph at " + where);
    }
  }
  v.detail << "500 components x 3 deltas";
}

void h_power_bound(Verdict& v) {
  Rng rng(5005);
  int averaged_ok = 0;
  for (int t = 0; t < 500; ++t) {
    const Tree tree = random_full_component(rng, 20 + static_cast<int>(uniform_below(rng, 61)), 3,
                                            3 + static_cast<int>(uniform_below(rng, 3)), 20);
    const HPowerResult r = h_power_decompose(tree, 3);
    const std::string where = "component " + std::to_string(t);
    v.require(3 * r.decomposition.total_power <= 17 * tree.power(), "power bound at " + where);
    for (const Part& p : r.decomposition.parts)
      v.require(p.terminals.size() <= 27, "terminal count at " + where);
    Units sum = 0;
    for (Units p : r.power_by_q) sum += p;
    if (sum <= 5 * r.stage_one_power) ++averaged_ok;
  }
  v.require(averaged_ok * 100 >= 95 * 500, "averaged bound below 95%");
  v.detail << "500 components, averaged bound on " << averaged_ok << "/500";
}

void lp_soundness(Verdict& v) {
  double worst = 0;
  int compared = 0;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    const int terminals = 2 + static_cast<int>(s % 7);
    const Instance g = fixture::random_graph(6000 + s, terminals + static_cast<int>(s % 3), terminals, 8);
    const ColumnSet cols = enumerate_columns(g, 3);
    const LpState lp = solve_lp(g, cols);
    for (const auto& cut : oracle::all_cut_sets(g)) {
      const double value = row_value(cols, lp.x, cut);
      worst = std::max(worst, 1 - value);
      v.require(value >= 1 - 1e-6, "cut row, seed " + std::to_string(s));
    }
    if (terminals <= 4) {
      const int k = std::max(terminals, 2);
      const LpState full = k == 3 ? lp : solve_lp(g, enumerate_columns(g, k));
      v.require(full.objective <= to_double(exact_min_power(g).total_power) + 1e-6,
                "objective above optimum, seed " + std::to_string(s));
      ++compared;
    }
  }
  v.detail << "100 instances, worst row deficit " << worst << ", " << compared
           << " compared with the optimum";
}

void irr_suite(Verdict& v, bool spanning) {
  RatioSuite& suite = spanning ? spanning_suite : steiner_suite;
  double sum = 0;
  int feasible = 0;
  for (std::uint64_t s = 1; s <= 200; ++s) {
    const int nodes = 5 + static_cast<int>(s % 5);
    Instance g = suite_instance((spanning ? 7000 : 8000) + s, nodes, 4, s % 4 == 0);
    if (spanning) g = g.as_spanning();
    const TreeMode mode = spanning ? TreeMode::kSpanning : TreeMode::kSteiner;
    const int k = spanning ? 3 : static_cast<int>(g.terminals().size());
    const Rational opt = exact_min_power(g, mode).total_power;
    suite.instances.push_back(g);
    suite.optimum.push_back(opt);
    suite.baseline.push_back(baseline_min_cost(g, mode).total_power);
    const std::string where = "seed " + std::to_string(s);
    try {
      const IrrResult r = irr_solve(g, k, s, 50 * g.edge_count());
      const bool ok = oracle::is_tree_containing(g, r.tree.edges, g.terminals());
      v.require(ok, "infeasible at " + where);
      feasible += ok ? 1 : 0;
      sum += opt == 0 ? 1.0 : to_double(r.tree.total_power / opt);
    } catch (const IterationCapError&) {
      v.require(false, "iteration cap at " + where);
    }
  }
  const double mean = sum / 200;
  v.require(mean <= (spanning ? 1.55 : 1.95), "mean ratio");
  v.detail << "200 runs, " << feasible << " feasible, mean ratio " << mean;
}

void delta_formulas(Verdict& v) {
  v.require(delta_spanning(1, 2) == BigRational(3, 2), "spanning delta");
  const double steiner = delta_steiner(1, 2);
  v.require(std::abs(steiner - (3 * std::log(4.0) - 2.25)) < 1e-6, "Steiner delta");
  for (DeltaKind kind : {DeltaKind::kSpanning, DeltaKind::kSteiner}) {
    const DeltaPropertyReport r = check_delta_properties(kind, 50);
    v.require(r.increasing && r.diminishing, "properties");
  }
  v.detail << "delta_steiner(1,2) = " << steiner;
}

void witness_statistics(Verdict& v) {
  for (int i = 1; i <= 3; ++i) {
    Rng rng(9000 + i);
    const Tree tree = random_full_component(rng, 12, 3, 6, 20);
    NodeId center = -1;
    for (NodeId x = 0; x < tree.node_count() && center < 0; ++x)
      if (tree.contains(x) && tree.degree(x) >= i + 2) center = x;
    v.require(center >= 0, "no node of degree " + std::to_string(i + 2));
    if (center < 0) continue;
    const WitnessStats s = witness_stats(tree, center, i, 10000, 90 + i);
    v.require(s.frequency_within_3_sigma, "frequency for i = " + std::to_string(i));
    v.require(s.all_spanning, "T* spanning for i = " + std::to_string(i));
    v.require(s.max_within_leaves <= i, "within-leaves count for i = " + std::to_string(i));
    v.detail << "i=" << i << " freq " << s.frequency << " (expect " << s.expected_probability
             << ", sigma " << s.sigma << "); ";
  }
}

void baseline_guarantee(Verdict& v) {
  int checked = 0;
  double worst = 0;
  for (const RatioSuite* suite : {&spanning_suite, &steiner_suite}) {
    for (std::size_t i = 0; i < suite->instances.size(); ++i) {
      v.require(suite->baseline[i] <= 2 * suite->optimum[i], "instance " + std::to_string(i));
      if (suite->optimum[i] != 0) worst = std::max(worst, to_double(suite->baseline[i] / suite->optimum[i]));
      ++checked;
    }
  }
  v.require(checked == 400, "suites were not built");
  v.detail << checked << " instances, worst ratio " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"power within cost bounds on random trees", eq1_on_random_trees},
      {"cost-to-power reduction fidelity", reduction_fidelity},
      {"min-power path oracle", path_oracle},
      {"bounded-degree decomposition bound", bounded_degree_bound},
      {"h-power decomposition bound", h_power_bound},
      {"LP soundness", lp_soundness},
      {"IRR spanning ratio", [](Verdict& v) { irr_suite(v, true); }},
      {"IRR Steiner ratio", [](Verdict& v) { irr_suite(v, false); }},
      {"delta formulas and properties", delta_formulas},
      {"witness statistics", witness_statistics},
      {"min-cost baseline within factor 2", baseline_guarantee},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[c].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += v.pass ? 0 : 1;
    std::printf("criterion %2zu %s: %s (%.2f s) %s\n", c + 1, v.pass ? "PASS" : "FAIL",
                criteria[c].first.c_str(), seconds, v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
