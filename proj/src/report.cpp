#include "powertree/report.hpp"

namespace powertree {

namespace {

Json edge_list(const Instance& instance, const std::vector<EdgeId>& edges) {
  Json list = Json::array();
  for (EdgeId e : edges) {
    const Edge& edge = instance.edge(e);
    list.push_back({{"id", e}, {"u", edge.u}, {"v", edge.v}, {"cost", format_cost(edge.cost)}});
  }
  return list;
}

}  // namespace

Json power_tree_json(const Instance& instance, const PowerTree& tree, const std::string& solver,
                     std::optional<std::uint64_t> seed) {
  Json powers = Json::object();
  for (const auto& [node, power] : tree.node_powers) powers[std::to_string(node)] = format_cost(power);
  Json record;
  record["edges"] = edge_list(instance, tree.edges);
  record["node_powers"] = powers;
  record["total_power"] = format_cost(tree.total_power);
  record["total_cost"] = format_cost(tree.total_cost);
  record["solver"] = solver;
  record["seed"] = seed ? Json(*seed) : Json(nullptr);
  return record;
}

Json path_json(const PathResult& path) {
  return {{"nodes", path.nodes}, {"edges", path.edges}, {"power", format_cost(path.power)}};
}

Json component_json(const Component& component) {
  Json record;
  record["terminals"] = component.terminals;
  record["sink"] = component.sink ? Json(*component.sink) : Json(nullptr);
  record["edges"] = component.edges;
  record["power"] = format_cost(component.power);
  return record;
}

Json decomposition_json(const Decomposition& decomposition) {
  const Tree& tree = decomposition.source;
  Json parts = Json::array();
  for (const Part& part : decomposition.parts) {
    Json edges = Json::array();
    for (int e : part.edges) edges.push_back({tree.edge(e).u, tree.edge(e).v});
    parts.push_back({{"edges", edges},
                     {"terminals", part.terminals},
                     {"power", format_cost(tree.to_cost(part.power))},
                     {"max_degree", max_part_degree(tree, part)}});
  }
  const ComponentGraph graph = component_graph(decomposition);
  return {{"parts", parts},
          {"tree_power", format_cost(tree.to_cost(tree.power()))},
          {"total_power", format_cost(tree.to_cost(decomposition.total_power))},
          {"component_graph_is_tree", graph.is_tree}};
}

Json h_power_json(const HPowerResult& result, int h) {
  const Tree& tree = result.decomposition.source;
  Json record = decomposition_json(result.decomposition);
  record["h"] = h;
  record["q"] = result.q;
  record["stage_one_power"] = format_cost(tree.to_cost(result.stage_one_power));
  Json by_q = Json::array();
  for (Units p : result.power_by_q) by_q.push_back(format_cost(tree.to_cost(p)));
  record["power_by_q"] = by_q;
  return record;
}

Json lp_json(const ColumnSet& columns, const LpState& state) {
  Json nonzero = Json::array();
  for (std::size_t c = 0; c < state.x.size(); ++c) {
    if (state.x[c] <= 1e-12) continue;
    const Column& column = columns.columns[c];
    nonzero.push_back({{"terminals", columns.component_of(column).terminals},
                       {"sink", column.sink},
                       {"power", format_cost(columns.component_of(column).power)},
                       {"x", state.x[c]}});
  }
  return {{"objective", state.objective},
          {"columns", columns.columns.size()},
          {"rows", state.rows.size()},
          {"rounds", state.rounds},
          {"nonzero", nonzero}};
}

Json iteration_json(const IterationRecord& record, int index) {
  return {{"iteration", index},
          {"lp_objective", record.lp_objective},
          {"lp_rounds", record.lp_rounds},
          {"terminals", record.terminals},
          {"sink", record.sink},
          {"edges", record.edges},
          {"component_power", format_cost(record.component_power)},
          {"newly_zeroed", record.newly_zeroed}};
}

Json classification_json(const Tree& tree, const EdgeClassification& classes) {
  auto pairs = [&](const std::vector<int>& ids) {
    Json list = Json::array();
    for (int e : ids) list.push_back({tree.edge(e).u, tree.edge(e).v});
    return list;
  };
  return {{"heavy", pairs(classes.heavy)},
          {"middle", pairs(classes.middle)},
          {"light", pairs(classes.light)},
          {"gamma_heavy", format_cost(classes.gamma_heavy)},
          {"gamma_middle", format_cost(classes.gamma_middle)},
          {"alpha", format_cost(classes.alpha)},
          {"power", format_cost(tree.to_cost(tree.power()))},
          {"cost", format_cost(tree.to_cost(tree.cost()))}};
}

Json witness_stats_json(const WitnessStats& stats) {
  Json histogram = Json::object();
  for (auto [size, count] : stats.size_histogram) histogram[std::to_string(size)] = count;
  return {{"trials", stats.trials},
          {"i", stats.i},
          {"top_hits", stats.top_hits},
          {"frequency", stats.frequency},
          {"expected_probability", stats.expected_probability},
          {"sigma", stats.sigma},
          {"frequency_within_3_sigma", stats.frequency_within_3_sigma},
          {"witness_size_histogram", histogram},
          {"mean_harmonic", stats.mean_harmonic},
          {"harmonic_std_error", stats.harmonic_std_error},
          {"delta_bound", stats.delta_bound},
          {"harmonic_within_bound", stats.harmonic_within_bound},
          {"max_within_leaves", stats.max_within_leaves},
          {"all_spanning", stats.all_spanning}};
}

Json error_json(const Error& error) {
  return {{"error", std::string(error_code_name(error.code()))}, {"message", error.what()}};
}

}  // namespace powertree
