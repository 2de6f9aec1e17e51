#include "powertree/irr_solver.hpp"

#include <algorithm>

#include "powertree/components.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/rng.hpp"
#include "powertree/subgraph.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

bool zero_power_tree_exists(const Instance& instance) {
  std::vector<EdgeId> free;
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (instance.units(e) == 0) free.push_back(e);
  }
  return connects(instance, free, instance.terminals());
}

PowerTree prune(const Instance& instance, std::span<const EdgeId> edges) {
  std::vector<EdgeId> kept(edges.begin(), edges.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  const auto& terminals = instance.terminals();
  {
    UnionFind uf(instance.node_count());
    for (EdgeId e : kept) uf.unite(instance.edge(e).u, instance.edge(e).v);
    for (NodeId t : terminals) {
      if (!uf.same(t, terminals.front())) {
        throw Error(ErrorCode::kDisconnectedEdgeSet, "edge set does not connect the terminals");
      }
    }
    std::erase_if(kept, [&](EdgeId e) { return !uf.same(instance.edge(e).u, terminals.front()); });
  }
  // Largest incident cost at v over `kept` without edge `skip`.
  auto node_power = [&](NodeId v, EdgeId skip) {
    Units best = 0;
    for (const Incidence& inc : instance.incident(v)) {
      if (inc.edge != skip && std::binary_search(kept.begin(), kept.end(), inc.edge)) {
        best = std::max(best, instance.units(inc.edge));
      }
    }
    return best;
  };
  while (true) {
    EdgeId pick = -1;
    Units pick_gain = -1;
    for (EdgeId e : kept) {
      UnionFind uf(instance.node_count());
      for (EdgeId f : kept) {
        if (f != e) uf.unite(instance.edge(f).u, instance.edge(f).v);
      }
      if (!uf.same(instance.edge(e).u, instance.edge(e).v)) continue;  // bridge
      const NodeId u = instance.edge(e).u;
      const NodeId v = instance.edge(e).v;
      const Units gain = node_power(u, -1) - node_power(u, e) + node_power(v, -1) - node_power(v, e);
      if (gain > pick_gain) {
        pick_gain = gain;
        pick = e;
      }
    }
    if (pick < 0) break;
    kept.erase(std::find(kept.begin(), kept.end(), pick));
  }
  kept = strip_optional_leaves(instance, std::move(kept), terminals);
  return evaluate(instance, kept);
}

IrrResult irr_solve(const Instance& instance, int k, std::uint64_t seed, int max_iters,
                    Execution execution, double tol) {
  if (k < 2 || k > kMaxComponentTerminals) {
    throw Error(ErrorCode::kInvalidArgument, "k must be in [2, 4]");
  }
  if (max_iters < 1) throw Error(ErrorCode::kInvalidArgument, "max_iters must be positive");
  IrrResult result;
  result.trace.seed = seed;
  result.trace.k = k;
  result.trace.sampled_power_sum = 0;
  Rng rng(seed);
  std::vector<char> zeroed(instance.edge_count(), 0);
  std::vector<EdgeId> sampled;
  Instance current = instance;
  const bool single = instance.terminals().size() == 1;
  while (true) {
    if (static_cast<int>(result.trace.iterations.size()) >= max_iters) {
      throw IterationCapError("iteration cap of " + std::to_string(max_iters) + " reached",
                              result.trace);
    }
    IterationRecord record;
    const double draw = uniform_unit(rng);
    if (!single) {
      const ColumnSet columns = enumerate_columns(current, k, execution);
      const LpState lp = solve_lp(current, columns, tol, execution);
      record.lp_objective = lp.objective;
      record.lp_rounds = lp.rounds;
      double mass = 0;
      for (double value : lp.x) mass += std::max(0.0, value);
      if (!(mass > 0)) throw Error(ErrorCode::kInternal, "LP solution has no mass to sample");
      const double target = draw * mass;
      std::size_t chosen = 0;
      double running = 0;
      for (std::size_t c = 0; c < lp.x.size(); ++c) {
        if (lp.x[c] <= 0) continue;
        chosen = c;
        running += lp.x[c];
        if (running > target) break;
      }
      const Column& column = columns.columns[chosen];
      const Component& component = columns.component_of(column);
      record.terminals = component.terminals;
      record.sink = column.sink;
      record.edges = component.edges;
      record.component_power = component.power;
      for (EdgeId e : component.edges) {
        if (!zeroed[e] && current.units(e) > 0) ++record.newly_zeroed;
        zeroed[e] = 1;
        sampled.push_back(e);
      }
      std::vector<EdgeId> all;
      for (EdgeId e = 0; e < instance.edge_count(); ++e) {
        if (zeroed[e]) all.push_back(e);
      }
      current = instance.with_zeroed(all);
    } else {
      record.terminals = instance.terminals();
      record.sink = instance.root();
      record.component_power = 0;
    }
    result.trace.sampled_power_sum += record.component_power;
    result.trace.iterations.push_back(std::move(record));
    if (zero_power_tree_exists(current)) break;
  }
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (instance.units(e) == 0) sampled.push_back(e);
  }
  result.tree = prune(instance, sampled);
  return result;
}

}  // namespace powertree
