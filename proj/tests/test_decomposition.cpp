#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "powertree/decomposition.hpp"
#include "powertree/errors.hpp"

using namespace powertree;
using fixture::tree_edge;

namespace {

std::set<std::pair<NodeId, NodeId>> pairs_of(const Tree& t, const std::vector<int>& edges) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (int e : edges) out.emplace(std::min(t.edge(e).u, t.edge(e).v), std::max(t.edge(e).u, t.edge(e).v));
  return out;
}

std::set<std::pair<NodeId, NodeId>> pairs(std::initializer_list<std::pair<NodeId, NodeId>> list) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (auto [a, b] : list) out.emplace(std::min(a, b), std::max(a, b));
  return out;
}

void check_covers(const Decomposition& d) {
  std::vector<char> seen(d.source.edge_count(), 0);
  for (const Part& p : d.parts)
    for (int e : p.edges) seen[e] = 1;
  CHECK(std::count(seen.begin(), seen.end(), 0) == 0);
}

// A random full component, or a padded tree whose terminals sit anywhere.
Tree random_component(Rng& rng) {
  return random_full_component(rng, 4 + static_cast<int>(uniform_below(rng, 30)), 3,
                               3 + static_cast<int>(uniform_below(rng, 5)), 20);
}

}  // namespace

TEST_CASE("split-node example with delta 3") {
  // f0 r1 v2 s4=3 s2=4 a5 b6 c7 d8 e9
  const Tree t = fixture::split_node_tree();
  REQUIRE(t.is_full_component());
  const Decomposition d = bounded_degree_decompose(t, 3);
  REQUIRE(d.parts.size() == 2);
  CHECK(pairs_of(t, d.parts[0].edges) == pairs({{2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 7}}));
  CHECK(pairs_of(t, d.parts[1].edges) ==
        pairs({{1, 2}, {1, 9}, {1, 0}, {2, 8}, {2, 3}, {3, 6}}));
  CHECK(d.parts[0].terminals == std::vector<NodeId>{5, 6, 7});
  CHECK(d.parts[1].terminals == std::vector<NodeId>{0, 6, 8, 9});
  for (const Part& p : d.parts) CHECK(max_part_degree(t, p) <= 3);
  // v's copies have degree within [2, delta].
  for (const Part& p : d.parts) {
    CHECK(part_degree(t, p, 2) >= 2);
    CHECK(part_degree(t, p, 2) <= 3);
  }
  const ComponentGraph g = component_graph(d);
  CHECK(g.is_tree);
  CHECK(g.edges.size() == 7);
  check_covers(d);
}

TEST_CASE("a tree within the degree bound stays whole") {
  const Tree t = fixture::split_node_tree();
  const Decomposition d = bounded_degree_decompose(t, 4);
  REQUIRE(d.parts.size() == 1);
  CHECK(d.total_power == t.power());
  CHECK(d.parts[0].edges.size() == static_cast<std::size_t>(t.edge_count()));
}

TEST_CASE("bounded-degree decomposition rejects bad input") {
  const Tree t = fixture::split_node_tree();
  CHECK_THROWS_AS(bounded_degree_decompose(t, 2), Error);
  const Tree not_full(3, {{0, 1, 1}, {1, 2, 1}}, {0, 1, 2});
  CHECK_THROWS_AS(bounded_degree_decompose(not_full, 3), Error);
}

TEST_CASE("level cut example with h 3 and q 1") {
  const Tree t = fixture::level_cut_tree();
  std::vector<int> all(t.edge_count());
  for (int e = 0; e < t.edge_count(); ++e) all[e] = e;
  const auto parts = level_cut(t, all, 3, 1);
  REQUIRE(parts.size() == 4);
  // r0 s1=1 v2 s3=3 a4 b5 u6 s7=7 c8 s9=9 d10 e11 f12 s13=13 g14 h15 i16
  CHECK(pairs_of(t, parts[0]) == pairs({{0, 1}, {0, 2}, {1, 4}, {2, 6}, {6, 9}, {9, 13}, {13, 15}}));
  CHECK(pairs_of(t, parts[1]) == pairs({{1, 3}, {1, 4}, {3, 7}, {3, 8}, {7, 11}, {7, 12}}));
  CHECK(pairs_of(t, parts[2]) == pairs({{2, 5}, {2, 6}, {6, 9}, {6, 10}, {9, 13}, {9, 14}, {13, 16}}));
  CHECK(pairs_of(t, parts[3]) == pairs({{13, 15}, {13, 16}}));
  int containing_u = 0;
  for (const auto& p : parts)
    for (int e : p)
      if (t.edge(e).u == 6 || t.edge(e).v == 6) {
        ++containing_u;
        break;
      }
  CHECK(containing_u == 2);
  const Decomposition d = make_decomposition(t, parts);
  CHECK(component_graph(d).is_tree);
  check_covers(d);
}

TEST_CASE("small components skip the level cut") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Tree t = random_full_component(rng, 4, 3, 4, 9);
    const HPowerResult r = h_power_decompose(t, 3);
    CHECK(r.decomposition.total_power == r.stage_one_power);
    const Decomposition one = bounded_degree_decompose(t, 3);
    CHECK(r.decomposition.parts.size() == one.parts.size());
  }
}

TEST_CASE("dummy leaves: single edge becomes a three-edge path") {
  const Tree t(2, {{0, 1, 7}}, {0, 1});
  const DummyLeaves padded = attach_dummy_leaves(t);
  REQUIRE(padded.tree.edge_count() == 3);
  CHECK(padded.tree.terminals() == std::vector<NodeId>{2, 3});
  CHECK(padded.tree.edge(1).cost == 0);
  CHECK(padded.tree.edge(2).cost == 0);
  CHECK(padded.tree.is_full_component());
  CHECK(padded.tree.power() == t.power());
}

TEST_CASE("dummy leaves are added even to full components") {
  const Tree t = fixture::split_node_tree();
  const DummyLeaves padded = attach_dummy_leaves(t);
  CHECK(padded.tree.edge_count() == t.edge_count() + static_cast<int>(t.terminals().size()));
  CHECK(padded.tree.is_full_component());
}

TEST_CASE("contracting dummy leaves keeps decomposition power") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    // Random tree with terminals at every node of degree <= 2 plus a few more.
    const int n = 4 + static_cast<int>(uniform_below(rng, 12));
    std::vector<TreeEdge> edges;
    for (NodeId v = 1; v < n; ++v)
      edges.push_back({static_cast<NodeId>(uniform_below(rng, v)), v,
                       static_cast<Units>(1 + uniform_below(rng, 9))});
    std::vector<int> degree(n, 0);
    for (const auto& e : edges) ++degree[e.u], ++degree[e.v];
    std::vector<NodeId> terminals;
    for (NodeId v = 0; v < n; ++v)
      if (degree[v] == 1 || uniform_below(rng, 3) == 0) terminals.push_back(v);
    const Tree t(n, edges, terminals);
    const DummyLeaves padded = attach_dummy_leaves(t);
    for (int delta : {3, 4}) {
      const Decomposition d = bounded_degree_decompose(padded.tree, delta);
      const Decomposition back = contract_dummy_leaves(padded, t, d);
      CHECK(back.total_power == d.total_power);
      check_covers(back);
    }
  }
}

TEST_CASE("dummy leaves reject non-terminal leaves") {
  const Tree t(3, {{0, 1, 1}, {1, 2, 1}}, {0, 1});
  CHECK_THROWS_AS(attach_dummy_leaves(t), Error);
}

TEST_CASE("component graph verdicts") {
  const Tree star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}, {1, 2, 3, 4});
  const Decomposition one = make_decomposition(star, {{0, 1, 2, 3}});
  const ComponentGraph g = component_graph(one);
  CHECK(g.is_tree);
  CHECK(g.edges.size() == 4);
  // Two parts sharing terminals 1 and 2 make a cycle.
  const Decomposition two = make_decomposition(star, {{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(component_graph(two).is_tree);
}

TEST_CASE("bounded-degree guarantees on random components") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Tree t = random_component(rng);
    for (int delta : {3, 4, 5}) {
      const Decomposition d = bounded_degree_decompose(t, delta);
      const Units half = (delta + 1) / 2;
      CHECK(d.total_power * (half - 1) <= (half + 1) * t.power());
      for (const Part& p : d.parts) CHECK(max_part_degree(t, p) <= delta);
      CHECK(component_graph(d).is_tree);
      check_covers(d);
    }
  }
}

TEST_CASE("h-power guarantees on random components") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = random_full_component(rng, 20 + static_cast<int>(uniform_below(rng, 60)), 3, 3, 20);
    const HPowerResult r = h_power_decompose(t, 3);
    CHECK(3 * r.decomposition.total_power <= 17 * t.power());
    for (const Part& p : r.decomposition.parts) CHECK(p.terminals.size() <= 27);
    CHECK(component_graph(r.decomposition).is_tree);
    check_covers(r.decomposition);
    REQUIRE(r.power_by_q.size() == 3);
    CHECK(r.decomposition.total_power == *std::min_element(r.power_by_q.begin(), r.power_by_q.end()));
    for (int q = 0; q < 3; ++q) {
      const HPowerResult fixed = h_power_decompose(t, 3, q);
      CHECK(fixed.decomposition.total_power == r.power_by_q[q]);
      CHECK(component_graph(fixed.decomposition).is_tree);
    }
  }
  CHECK_THROWS_AS(h_power_decompose(fixture::split_node_tree(), 2), Error);
  CHECK_THROWS_AS(h_power_decompose(fixture::split_node_tree(), 3, 3), Error);
}
