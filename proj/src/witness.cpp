#include "powertree/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "powertree/analysis.hpp"
#include "powertree/errors.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

int BinaryTree::bin_node(NodeId source) const {
  for (int x = 0; x < node_count(); ++x) {
    if (original[x] == source) return x;
  }
  return -1;
}

BinaryTree build_binary_tree(const Tree& tree, int split_edge, NodeId anchor) {
  if (!tree.is_full_component() || tree.terminals().size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need a full component with at least two terminals");
  }
  if (split_edge < 0 || split_edge >= tree.edge_count() ||
      (tree.edge(split_edge).u != anchor && tree.edge(split_edge).v != anchor)) {
    throw Error(ErrorCode::kInvalidArgument, "split edge must be incident to the anchor");
  }
  BinaryTree bin;
  bin.node_of_edge.assign(tree.edge_count(), -1);
  auto add_node = [&](int parent, int slot, Units cost, bool dummy, NodeId original) {
    const int id = bin.node_count();
    bin.parent.push_back(parent);
    bin.children.push_back({-1, -1});
    bin.cost.push_back(cost);
    bin.dummy.push_back(dummy ? 1 : 0);
    bin.original.push_back(original);
    bin.level.push_back(parent < 0 ? 0 : bin.level[parent] + 1);
    if (parent >= 0) bin.children[parent][slot] = id;
    return id;
  };

  std::function<void(int, int, NodeId, NodeId, Units, std::vector<int>)> attach =
      [&](int parent, int slot, NodeId x, NodeId from, Units cost, std::vector<int> chain) {
        const bool dummy = chain.empty();
        while (tree.degree(x) == 2) {
          for (const Incidence& inc : tree.incident(x)) {
            if (inc.to == from) continue;
            cost += tree.edge(inc.edge).cost;
            chain.push_back(inc.edge);
            from = x;
            x = inc.to;
            break;
          }
        }
        const int node = add_node(parent, slot, cost, dummy && cost == 0, x);
        for (int e : chain) bin.node_of_edge[e] = node;
        std::vector<Incidence> below;
        for (const Incidence& inc : tree.incident(x)) {
          if (inc.to != from) below.push_back(inc);
        }
        std::sort(below.begin(), below.end(), [&](const Incidence& a, const Incidence& b) {
          const Units ca = tree.edge(a.edge).cost, cb = tree.edge(b.edge).cost;
          return ca != cb ? ca > cb : a.edge < b.edge;
        });
        const int k = static_cast<int>(below.size());
        int current = node;
        for (int j = 0; j < k; ++j) {
          const Incidence& inc = below[j];
          if (j == k - 1) {
            attach(current, 1, inc.to, x, tree.edge(inc.edge).cost, {inc.edge});
          } else {
            attach(current, 0, inc.to, x, tree.edge(inc.edge).cost, {inc.edge});
            if (j < k - 2) current = add_node(current, 1, 0, true, -1);
          }
        }
      };

  const NodeId other = tree.edge(split_edge).other(anchor);
  const int root = add_node(-1, 0, 0, false, -1);
  attach(root, 0, anchor, other, tree.edge(split_edge).cost, {split_edge});
  attach(root, 1, other, anchor, 0, {});
  return bin;
}

BinaryTree build_binary_tree_at(const Tree& tree, NodeId v) {
  int split = -1;
  for (const Incidence& inc : tree.incident(v)) {
    const Units c = tree.edge(inc.edge).cost;
    if (split < 0 || c < tree.edge(split).cost || (c == tree.edge(split).cost && inc.edge > split)) {
      split = inc.edge;
    }
  }
  if (split < 0) throw Error(ErrorCode::kInvalidArgument, "node has no incident edge");
  return build_binary_tree(tree, split, v);
}

Marking random_marking(const BinaryTree& bin, Rng& rng) {
  Marking marking(bin.node_count(), -1);
  for (int x = 0; x < bin.node_count(); ++x) {
    if (!bin.is_leaf(x)) marking[x] = static_cast<signed char>(uniform_below(rng, 2));
  }
  return marking;
}

WitnessStructure derive_witness(const BinaryTree& bin, const Tree& tree, Marking marking) {
  const int n = bin.node_count();
  WitnessStructure w;
  w.descent_leaf.assign(n, -1);
  std::vector<int> descent_bin(n, -1);
  // Children always have larger ids than their parents.
  for (int x = n - 1; x >= 0; --x) {
    if (bin.is_leaf(x)) {
      descent_bin[x] = x;
    } else {
      descent_bin[x] = descent_bin[bin.children[x][1 - marking[x]]];
    }
    w.descent_leaf[x] = bin.original[descent_bin[x]];
  }
  std::vector<std::pair<int, int>> pairs;  // bin leaves
  for (int x = 0; x < n; ++x) {
    if (bin.is_leaf(x)) continue;
    const int a = descent_bin[x];
    const int b = descent_bin[bin.children[x][marking[x]]];
    pairs.emplace_back(a, b);
    NodeId s = bin.original[a], t = bin.original[b];
    if (s > t) std::swap(s, t);
    w.tstar.emplace_back(s, t);
  }
  // Euler intervals: y is in the subtree of x iff in[x] <= in[y] < out[x].
  std::vector<int> in(n), out(n);
  int clock = 0;
  std::vector<std::pair<int, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [x, done] = stack.back();
    stack.pop_back();
    if (done) {
      out[x] = clock;
      continue;
    }
    in[x] = clock++;
    stack.push_back({x, true});
    if (!bin.is_leaf(x)) {
      stack.push_back({bin.children[x][1], false});
      stack.push_back({bin.children[x][0], false});
    }
  }
  auto inside = [&](int y, int x) { return in[x] <= in[y] && in[y] < out[x]; };
  w.witness.assign(tree.edge_count(), {});
  for (int e = 0; e < tree.edge_count(); ++e) {
    const int c = bin.node_of_edge[e];
    if (c < 0) continue;
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
      if (inside(pairs[p].first, c) != inside(pairs[p].second, c)) w.witness[e].push_back(p);
    }
  }
  w.marking = std::move(marking);
  return w;
}

WitnessStructure sample_witness(const BinaryTree& bin, const Tree& tree, std::uint64_t seed) {
  Rng rng(seed);
  return derive_witness(bin, tree, random_marking(bin, rng));
}

namespace {

struct TrialOutcome {
  bool top_hit = false;
  int witness_size = 0;
  int within = 0;
  bool spanning = false;
};

}  // namespace

WitnessStats witness_stats(const Tree& tree, NodeId v, int i, int trials, std::uint64_t seed,
                           Execution execution) {
  if (v < 0 || v >= tree.node_count() || tree.degree(v) < 3) {
    throw Error(ErrorCode::kInvalidArgument, "witness node must have degree at least 3");
  }
  if (i < 1 || i > tree.degree(v) - 2) {
    throw Error(ErrorCode::kInvalidArgument, "i must lie in [1, d(v) - 2]");
  }
  if (trials < 1000) throw Error(ErrorCode::kInvalidArgument, "need at least 1000 trials");
  const BinaryTree bin = build_binary_tree_at(tree, v);
  // chain[j] for j < i: bin node whose children are (c_{j+1}, next).
  std::vector<int> chain{bin.bin_node(v)};
  for (int j = 1; j < i; ++j) chain.push_back(bin.children[chain.back()][1]);
  const int top_leaf = bin.children[chain.back()][1];  // d'
  std::vector<int> expensive;                          // bin nodes below e^1..e^i
  for (int x : chain) expensive.push_back(bin.children[x][0]);

  std::vector<TrialOutcome> outcomes(trials);
  auto run_trial = [&](int t) {
    const WitnessStructure w = sample_witness(bin, tree, derive_seed(seed, static_cast<std::uint64_t>(t)));
    TrialOutcome& o = outcomes[t];
    UnionFind uf(tree.node_count());
    int joined = 0;
    for (auto [a, b] : w.tstar) joined += uf.unite(a, b) ? 1 : 0;
    o.spanning = joined == static_cast<int>(w.tstar.size()) &&
                 w.tstar.size() + 1 == tree.terminals().size();
    for (NodeId s : tree.terminals()) o.spanning = o.spanning && uf.same(s, tree.terminals().front());

    int x = 0;
    for (; x < i; ++x) {
      if (w.marking[chain[x]] != 0) break;  // the e^{x+1} side is unmarked: s' ends there
    }
    o.top_hit = x == i;

    std::vector<char> in_union(w.tstar.size(), 0);
    for (int node : expensive) {
      for (int e = 0; e < tree.edge_count(); ++e) {
        if (bin.node_of_edge[e] != node) continue;
        for (int p : w.witness[e]) in_union[p] = 1;
      }
    }
    o.witness_size = static_cast<int>(std::count(in_union.begin(), in_union.end(), 1));

    std::vector<NodeId> leaves;
    for (int node : expensive) leaves.push_back(w.descent_leaf[node]);
    leaves.push_back(w.descent_leaf[top_leaf]);
    std::sort(leaves.begin(), leaves.end());
    for (auto [a, b] : w.tstar) {
      if (std::binary_search(leaves.begin(), leaves.end(), a) &&
          std::binary_search(leaves.begin(), leaves.end(), b)) {
        ++o.within;
      }
    }
  };
  if (execution == Execution::kSerial) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int t = 0; t < trials; ++t) run_trial(t);
  }

  WitnessStats stats;
  stats.trials = trials;
  stats.i = i;
  for (const TrialOutcome& o : outcomes) {
    stats.top_hits += o.top_hit ? 1 : 0;
    ++stats.size_histogram[o.witness_size];
    stats.max_within_leaves = std::max(stats.max_within_leaves, o.within);
    stats.all_spanning = stats.all_spanning && o.spanning;
  }
  stats.expected_probability = std::ldexp(1.0, -i);
  stats.frequency = static_cast<double>(stats.top_hits) / trials;
  stats.sigma = std::sqrt(stats.expected_probability * (1 - stats.expected_probability) / trials);
  stats.frequency_within_3_sigma =
      std::abs(stats.frequency - stats.expected_probability) <= 3 * stats.sigma;
  double sum = 0, sum_sq = 0;
  for (auto [size, count] : stats.size_histogram) {
    const double h = static_cast<double>(harmonic(size));
    sum += h * count;
    sum_sq += h * h * count;
  }
  stats.mean_harmonic = sum / trials;
  const double variance = std::max(0.0, sum_sq / trials - stats.mean_harmonic * stats.mean_harmonic);
  stats.harmonic_std_error = std::sqrt(variance / trials);
  stats.delta_bound = delta_steiner(1.0, i);
  stats.harmonic_within_bound =
      stats.mean_harmonic <= stats.delta_bound + 3 * stats.harmonic_std_error;
  return stats;
}

}  // namespace powertree
