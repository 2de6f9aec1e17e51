#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powertree/analysis.hpp"
#include "powertree/bench.hpp"
#include "powertree/components.hpp"
#include "powertree/decomposition.hpp"
#include "powertree/generators.hpp"
#include "powertree/irr_solver.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/path_power.hpp"
#include "powertree/reference_solvers.hpp"
#include "powertree/report.hpp"
#include "powertree/witness.hpp"

using namespace powertree;

namespace {

// "u v" per line ('#' comments); each pair must be an instance edge.
std::vector<EdgeId> read_edge_list(const Instance& instance, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::vector<EdgeId> edges;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw.substr(0, raw.find('#')));
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest))
      throw Error(ErrorCode::kMalformedLine, path + ":" + std::to_string(line) + ": expected 'u v'");
    if (u < 0 || v < 0 || u >= instance.node_count() || v >= instance.node_count())
      throw Error(ErrorCode::kNodeOutOfRange, path + ":" + std::to_string(line) + ": node out of range");
    const auto e = instance.find_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    if (!e)
      throw Error(ErrorCode::kInvalidArgument,
                  path + ":" + std::to_string(line) + ": no edge " + std::to_string(u) + "-" +
                      std::to_string(v));
    edges.push_back(*e);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Tree read_tree(const Instance& instance, const std::string& edge_file) {
  if (edge_file.empty()) {
    std::vector<EdgeId> all(instance.edge_count());
    for (EdgeId e = 0; e < instance.edge_count(); ++e) all[e] = e;
    return Tree::from_instance(instance, all);
  }
  const std::vector<EdgeId> edges = read_edge_list(instance, edge_file);
  return Tree::from_instance(instance, edges);
}

void print(const Json& record) { std::cout << record.dump(2) << '\n'; }

std::vector<NodeId> parse_id_list(const std::string& text) {
  std::vector<NodeId> ids;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      ids.push_back(id);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad node id '" + token + "' in --terminals");
    }
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-power Steiner and spanning trees: solvers, relaxations, decompositions"};
  app.require_subcommand(1);

  // solve
  std::string instance_file;
  std::string algo = "irr";
  int k = 3;
  std::uint64_t seed = 1;
  int max_iters = 0;
  std::string trace_file;
  bool spanning = false;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print the tree record");
  solve->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", algo, "irr, exact, exact-dp, mst or steiner-cost")
      ->check(CLI::IsMember({"irr", "exact", "exact-dp", "mst", "steiner-cost"}))
      ->capture_default_str();
  solve->add_option("--k", k, "Max terminals per component (irr)")->check(CLI::Range(1, 4))
      ->capture_default_str();
  solve->add_option("--seed", seed, "Random seed (irr)")->capture_default_str();
  solve->add_option("--max-iters", max_iters, "Iteration cap (irr); 0 means 50 * |E|")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  solve->add_option("--trace", trace_file, "Write one JSON line per irr iteration");
  solve->add_flag("--spanning", spanning, "Make every node a terminal");

  // path
  int from = 0, to = 0;
  auto* path = app.add_subcommand("path", "Min-power path between two nodes");
  path->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  path->add_option("--from", from, "Source node")->required();
  path->add_option("--to", to, "Target node")->required();

  // component
  std::string terminal_list;
  int component_k = 4;
  auto* component = app.add_subcommand("component", "Min-power component on a terminal subset");
  component->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  component->add_option("--terminals", terminal_list, "Comma-separated terminal ids")->required();
  component->add_option("--k", component_k, "Largest allowed subset size")->check(CLI::Range(1, 4))
      ->capture_default_str();

  // decompose
  std::string tree_file;
  std::string decompose_mode;
  int delta = 3;
  int h = 3;
  std::string q_text = "best";
  auto* decompose = app.add_subcommand("decompose", "Decompose a tree into components");
  decompose->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  decompose->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  decompose->add_option("--tree", tree_file, "Tree edges, one 'u v' pair per line (default: all edges)")
      ->check(CLI::ExistingFile);
  decompose->add_option("--mode", decompose_mode, "degree or hpow")
      ->required()->check(CLI::IsMember({"degree", "hpow"}));
  decompose->add_option("--delta", delta, "Max part degree (degree mode)")->check(CLI::Range(3, 1000))
      ->capture_default_str();
  decompose->add_option("--h", h, "Level spacing (hpow mode)")->check(CLI::Range(3, 6))
      ->capture_default_str();
  decompose->add_option("--q", q_text, "Level offset in [0, h) or 'best' (hpow mode)")
      ->capture_default_str();

  // lp
  int lp_k = 3;
  double tol = 1e-7;
  auto* lp = app.add_subcommand("lp", "Solve the component LP by cutting planes");
  lp->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  lp->add_option("--k", lp_k, "Max terminals per component")->check(CLI::Range(1, 4))
      ->capture_default_str();
  lp->add_option("--tol", tol, "Cut violation tolerance")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analysis helpers");
  analyze->require_subcommand(1);
  std::string delta_kind = "steiner";
  int i_max = 10;
  double m = 1.0;
  auto* analyze_delta = analyze->add_subcommand("delta", "Tabulate the delta series as CSV");
  analyze_delta->add_option("--kind", delta_kind, "spanning or steiner")
      ->check(CLI::IsMember({"spanning", "steiner"}))->capture_default_str();
  analyze_delta->add_option("--i-max", i_max, "Largest i")->check(CLI::Range(1, 50))
      ->capture_default_str();
  analyze_delta->add_option("--m", m, "Scale factor")->capture_default_str();
  auto* classify = analyze->add_subcommand("classify", "Heavy, middle and light edges of a tree");
  classify->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  classify->add_option("--tree", tree_file, "Tree edges, one 'u v' pair per line (default: all edges)")
      ->check(CLI::ExistingFile);
  int node = 0;
  int witness_i = 1;
  int trials = 10000;
  auto* witness = analyze->add_subcommand("witness", "Witness tree sampling statistics");
  witness->add_option("instance", instance_file, "Instance file")->required()->check(CLI::ExistingFile);
  witness->add_option("--tree", tree_file, "Tree edges, one 'u v' pair per line (default: all edges)")
      ->check(CLI::ExistingFile);
  witness->add_option("--node", node, "Internal node v")->required();
  witness->add_option("--i", witness_i, "Number of top edges at v")->capture_default_str();
  witness->add_option("--trials", trials, "Number of sampled markings")->capture_default_str();
  witness->add_option("--seed", seed, "Master seed")->capture_default_str();

  // bench
  std::string config_file;
  std::string out_file;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  bench->add_option("config", config_file, "Suite config file")->required()->check(CLI::ExistingFile);
  bench->add_option("--out", out_file, "CSV output path (default: standard output)");
  bench->add_flag("--no-timing", no_timing, "Leave the wall_ms column empty");

  // gen
  std::string kind = "uniform-random";
  GeneratorParams params;
  std::string low_text = "0", high_text = "1";
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", kind,
                  "uniform-random, euclidean-powerlaw, two-level or reduction-wrapped")
      ->capture_default_str();
  gen->add_option("--nodes", params.nodes, "Node count")->check(CLI::Range(2, 100000))
      ->capture_default_str();
  gen->add_option("--terminals", params.terminals, "Terminal count")->check(CLI::Range(1, 100000))
      ->capture_default_str();
  gen->add_option("--seed", params.seed, "Seed")->capture_default_str();
  gen->add_option("--density", params.density, "Extra edge probability")->capture_default_str();
  gen->add_option("--max-cost", params.max_cost, "Largest integer cost")->capture_default_str();
  gen->add_option("--exponent", params.exponent, "Distance exponent (euclidean)")
      ->capture_default_str();
  gen->add_option("--grid", params.grid, "Grid side (euclidean)")->capture_default_str();
  gen->add_option("--low", low_text, "Low cost (two-level)")->capture_default_str();
  gen->add_option("--high", high_text, "High cost (two-level)")->capture_default_str();
  gen->add_option("--out", out_file, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      Instance instance = read_instance_file(instance_file);
      if (spanning) instance = instance.as_spanning();
      const TreeMode mode = spanning ? TreeMode::kSpanning : TreeMode::kSteiner;
      if (algo == "irr") {
        const int cap = max_iters > 0 ? max_iters : 50 * instance.edge_count();
        auto write_trace = [&](const RunTrace& trace) {
          if (trace_file.empty()) return;
          std::ofstream out(trace_file);
          if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + trace_file);
          for (std::size_t i = 0; i < trace.iterations.size(); ++i)
            out << iteration_json(trace.iterations[i], static_cast<int>(i)).dump() << '\n';
        };
        try {
          const IrrResult result = irr_solve(instance, k, seed, cap);
          write_trace(result.trace);
          Json record = power_tree_json(instance, result.tree, "irr", seed);
          record["k"] = k;
          record["iterations"] = result.trace.iterations.size();
          record["sampled_power"] = format_cost(result.trace.sampled_power_sum);
          print(record);
        } catch (const IterationCapError& e) {
          write_trace(e.trace());
          throw;
        }
      } else {
        PowerTree tree;
        if (algo == "exact") tree = exact_min_power(instance, mode);
        else if (algo == "exact-dp") tree = exact_min_power_dp(instance);
        else if (algo == "mst") tree = min_spanning_tree(instance);
        else tree = baseline_min_cost(instance, mode);
        print(power_tree_json(instance, tree, algo));
      }
    } else if (*path) {
      const Instance instance = read_instance_file(instance_file);
      print(path_json(min_power_path(instance, from, to)));
    } else if (*component) {
      const Instance instance = read_instance_file(instance_file);
      print(component_json(min_power_component(instance, parse_id_list(terminal_list), component_k)));
    } else if (*decompose) {
      const Instance instance = read_instance_file(instance_file);
      const Tree tree = read_tree(instance, tree_file);
      // Trees with internal terminals go through dummy pendants and back.
      std::optional<DummyLeaves> padded;
      if (!tree.is_full_component()) padded = attach_dummy_leaves(tree);
      const Tree& work = padded ? padded->tree : tree;
      auto restore = [&](const Decomposition& d) {
        return padded ? contract_dummy_leaves(*padded, tree, d) : d;
      };
      if (decompose_mode == "degree") {
        Json record = decomposition_json(restore(bounded_degree_decompose(work, delta)));
        record["delta"] = delta;
        record["padded"] = padded.has_value();
        print(record);
      } else {
        std::optional<int> q;
        if (q_text != "best") {
          try {
            q = std::stoi(q_text);
          } catch (const std::exception&) {
            throw Error(ErrorCode::kInvalidArgument, "--q expects an integer or 'best'");
          }
        }
        HPowerResult result = h_power_decompose(work, h, q);
        result.decomposition = restore(result.decomposition);
        Json record = h_power_json(result, h);
        record["padded"] = padded.has_value();
        print(record);
      }
    } else if (*lp) {
      const Instance instance = read_instance_file(instance_file);
      const ColumnSet columns = enumerate_columns(instance, lp_k);
      print(lp_json(columns, solve_lp(instance, columns, tol)));
    } else if (*analyze_delta) {
      const DeltaKind dk = delta_kind == "spanning" ? DeltaKind::kSpanning : DeltaKind::kSteiner;
      const DeltaPropertyReport report = check_delta_properties(dk, i_max, m);
      std::cout << "i,delta\n";
      for (std::size_t i = 1; i < report.values.size(); ++i)
        std::cout << i << ',' << report.values[i] << '\n';
      std::cout << "# increasing=" << (report.increasing ? "true" : "false")
                << " diminishing=" << (report.diminishing ? "true" : "false") << '\n';
    } else if (*classify) {
      const Instance instance = read_instance_file(instance_file);
      const Tree tree = read_tree(instance, tree_file);
      print(classification_json(tree, classify_edges(tree)));
    } else if (*witness) {
      const Instance instance = read_instance_file(instance_file);
      const Tree tree = read_tree(instance, tree_file);
      print(witness_stats_json(witness_stats(tree, node, witness_i, trials, seed)));
    } else if (*bench) {
      const BenchReport report = run_bench(read_bench_config(config_file));
      const std::string csv = bench_csv(report, !no_timing);
      if (out_file.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_file);
        out << csv;
      }
      std::cout << bench_summary(report);
    } else if (*gen) {
      params.low = parse_cost(low_text);
      params.high = parse_cost(high_text);
      const std::string text = serialize_instance(generate(parse_generator_kind(kind), params));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_file);
        out << text;
      }
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_json(Error(ErrorCode::kInternal, e.what())).dump() << '\n';
    return 1;
  }
  return 0;
}
