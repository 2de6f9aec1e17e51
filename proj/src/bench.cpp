#include "powertree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "powertree/analysis.hpp"
#include "powertree/errors.hpp"
#include "powertree/irr_solver.hpp"
#include "powertree/rng.hpp"

namespace powertree {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  throw Error(ErrorCode::kMalformedLine, "bench config line " + std::to_string(line) + ": " + what);
}

long long parse_integer(int line, const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long n = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return n;
  } catch (const std::exception&) {
    bad_line(line, key + " expects an integer, got '" + value + "'");
  }
}

double parse_real(int line, const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    bad_line(line, key + " expects a number, got '" + value + "'");
  }
}

bool parse_bool(int line, const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_line(line, key + " expects true or false, got '" + value + "'");
}

int positive(int line, const std::string& key, long long n) {
  if (n < 1 || n > 1000000) bad_line(line, key + " must be in [1, 1000000]");
  return static_cast<int>(n);
}

std::map<std::string, std::string> parse_pairs(int line, std::istringstream& in) {
  std::map<std::string, std::string> pairs;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      bad_line(line, "expected key=value, got '" + token + "'");
    if (!pairs.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
      bad_line(line, "repeated key '" + token.substr(0, eq) + "'");
  }
  return pairs;
}

InstanceStanza parse_instance_stanza(int line, std::istringstream& in) {
  InstanceStanza stanza;
  for (const auto& [key, value] : parse_pairs(line, in)) {
    if (key == "kind") {
      try {
        stanza.kind = parse_generator_kind(value);
      } catch (const Error& e) {
        bad_line(line, e.what());
      }
    } else if (key == "nodes") {
      stanza.params.nodes = positive(line, key, parse_integer(line, key, value));
    } else if (key == "terminals") {
      stanza.params.terminals = positive(line, key, parse_integer(line, key, value));
    } else if (key == "count") {
      stanza.count = positive(line, key, parse_integer(line, key, value));
    } else if (key == "density") {
      stanza.params.density = parse_real(line, key, value);
    } else if (key == "max_cost") {
      stanza.params.max_cost = positive(line, key, parse_integer(line, key, value));
    } else if (key == "exponent") {
      stanza.params.exponent = parse_real(line, key, value);
    } else if (key == "grid") {
      stanza.params.grid = positive(line, key, parse_integer(line, key, value));
    } else if (key == "low" || key == "high") {
      Rational cost;
      try {
        cost = parse_cost(value);
      } catch (const Error& e) {
        bad_line(line, e.what());
      }
      (key == "low" ? stanza.params.low : stanza.params.high) = cost;
    } else if (key == "spanning") {
      stanza.mode = parse_bool(line, key, value) ? TreeMode::kSpanning : TreeMode::kSteiner;
    } else {
      bad_line(line, "unknown instance key '" + key + "'");
    }
  }
  return stanza;
}

SolverStanza parse_solver_stanza(int line, std::istringstream& in) {
  SolverStanza stanza;
  if (!(in >> stanza.name)) bad_line(line, "solver needs a name");
  static const std::vector<std::string> known = {"exact", "exact-dp", "mst", "steiner-cost", "irr"};
  if (std::find(known.begin(), known.end(), stanza.name) == known.end())
    bad_line(line, "unknown solver '" + stanza.name + "'");
  for (const auto& [key, value] : parse_pairs(line, in)) {
    if (key == "k") {
      stanza.k = positive(line, key, parse_integer(line, key, value));
    } else if (key == "repeat") {
      stanza.repeat = positive(line, key, parse_integer(line, key, value));
    } else if (key == "max_iters") {
      const long long n = parse_integer(line, key, value);
      if (n < 0) bad_line(line, "max_iters must be nonnegative");
      stanza.max_iters = static_cast<int>(std::min<long long>(n, 1000000));
    } else {
      bad_line(line, "unknown solver key '" + key + "'");
    }
  }
  return stanza;
}

struct Task {
  int instance;
  int solver;
  std::uint64_t seed;
};

struct Outcome {
  PowerTree tree;
  std::optional<int> iterations;
  std::optional<Rational> sampled_power;
};

Outcome run_solver(const Instance& instance, TreeMode mode, const SolverStanza& solver,
                   std::uint64_t seed) {
  Outcome out;
  if (solver.name == "exact") {
    out.tree = exact_min_power(instance, mode);
  } else if (solver.name == "exact-dp") {
    out.tree = exact_min_power_dp(instance);
  } else if (solver.name == "mst") {
    out.tree = min_spanning_tree(instance);
  } else if (solver.name == "steiner-cost") {
    out.tree = baseline_min_cost(instance, mode);
  } else {
    const int cap = solver.max_iters > 0 ? solver.max_iters : 50 * instance.edge_count();
    IrrResult result = irr_solve(instance, solver.k, seed, cap, Execution::kSerial);
    out.tree = std::move(result.tree);
    out.iterations = static_cast<int>(result.trace.iterations.size());
    out.sampled_power = result.trace.sampled_power_sum;
  }
  return out;
}

double solver_factor(const SolverStanza& solver, TreeMode mode) {
  if (solver.name == "exact" || solver.name == "exact-dp") return 1.0;
  if (solver.name == "irr") return theoretical_factor(mode);
  return 2.0;
}

std::string optional_cost(const std::optional<Rational>& value) {
  return value ? format_cost(*value) : std::string();
}

std::string fixed(double x, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, x);
  return buffer;
}

std::string_view mode_name(TreeMode mode) {
  return mode == TreeMode::kSpanning ? "spanning" : "steiner";
}

}  // namespace

std::string SolverStanza::label() const {
  return name == "irr" ? "irr-k" + std::to_string(k) : name;
}

BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig config;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line = 0;
  bool seen_seed = false;
  while (std::getline(lines, raw)) {
    ++line;
    std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    std::istringstream in(content);
    std::string head;
    in >> head;
    if (head == "instance") {
      config.instances.push_back(parse_instance_stanza(line, in));
    } else if (head == "solver") {
      config.solvers.push_back(parse_solver_stanza(line, in));
    } else if (const auto eq = content.find('='); eq != std::string::npos) {
      const std::string key = trim(std::string_view(content).substr(0, eq));
      const std::string value = trim(std::string_view(content).substr(eq + 1));
      if (key != "seed") bad_line(line, "unknown setting '" + key + "'");
      if (seen_seed) bad_line(line, "seed given twice");
      const long long seed = parse_integer(line, key, value);
      if (seed < 0) bad_line(line, "seed must be nonnegative");
      config.seed = static_cast<std::uint64_t>(seed);
      seen_seed = true;
    } else {
      bad_line(line, "expected 'instance', 'solver' or key = value");
    }
  }
  if (config.instances.empty())
    throw Error(ErrorCode::kMissingDirective, "bench config has no instance stanza");
  if (config.solvers.empty())
    throw Error(ErrorCode::kMissingDirective, "bench config has no solver stanza");
  return config;
}

BenchConfig read_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_bench_config(buffer.str());
}

BenchReport run_bench(const BenchConfig& config, Execution execution) {
  std::vector<Instance> instances;
  std::vector<const InstanceStanza*> stanza_of;
  for (const InstanceStanza& stanza : config.instances) {
    for (int c = 0; c < stanza.count; ++c) {
      GeneratorParams params = stanza.params;
      params.seed = derive_seed(config.seed, instances.size());
      Instance generated = generate(stanza.kind, params);
      instances.push_back(stanza.mode == TreeMode::kSpanning ? generated.as_spanning()
                                                             : std::move(generated));
      stanza_of.push_back(&stanza);
    }
  }

  const std::uint64_t row_master = derive_seed(config.seed, 1);
  std::vector<Task> tasks;
  for (int i = 0; i < static_cast<int>(instances.size()); ++i)
    for (int s = 0; s < static_cast<int>(config.solvers.size()); ++s)
      for (int r = 0; r < config.solvers[s].repeat; ++r)
        tasks.push_back({i, s, derive_seed(row_master, tasks.size())});

  BenchReport report;
  report.rows.resize(tasks.size());
  auto run_row = [&](std::size_t t) {
    const Task& task = tasks[t];
    const Instance& instance = instances[task.instance];
    const InstanceStanza& stanza = *stanza_of[task.instance];
    const SolverStanza& solver = config.solvers[task.solver];
    BenchRow& row = report.rows[t];
    row.instance = task.instance;
    row.kind = std::string(generator_kind_name(stanza.kind));
    row.nodes = instance.node_count();
    row.terminals = static_cast<int>(instance.terminals().size());
    row.edges = instance.edge_count();
    row.mode = stanza.mode;
    row.solver = solver.label();
    row.seed = task.seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome out = run_solver(instance, stanza.mode, solver, task.seed);
      row.status = "ok";
      row.power = out.tree.total_power;
      row.cost = out.tree.total_cost;
      row.iterations = out.iterations;
      row.sampled_power = out.sampled_power;
    } catch (const IterationCapError& e) {
      row.status = std::string(error_code_name(e.code()));
      row.iterations = static_cast<int>(e.trace().iterations.size());
      row.sampled_power = e.trace().sampled_power_sum;
    } catch (const Error& e) {
      row.status = std::string(error_code_name(e.code()));
    } catch (const std::exception&) {
      row.status = std::string(error_code_name(ErrorCode::kInternal));
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  };

  const auto count = static_cast<std::int64_t>(tasks.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::int64_t t = 0; t < count; ++t) run_row(static_cast<std::size_t>(t));
  } else {
    for (std::int64_t t = 0; t < count; ++t) run_row(static_cast<std::size_t>(t));
  }

  // Ratios against the first successful exact row of each instance.
  std::map<int, Rational> exact_power;
  for (const BenchRow& row : report.rows)
    if ((row.solver == "exact" || row.solver == "exact-dp") && row.power)
      exact_power.emplace(row.instance, *row.power);
  for (BenchRow& row : report.rows) {
    const auto it = exact_power.find(row.instance);
    if (!row.power || it == exact_power.end()) continue;
    if (it->second.numerator() == 0) {
      row.ratio = row.power->numerator() == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
      row.ratio = to_double(*row.power / it->second);
    }
  }

  // Summary keyed by (solver label, mode) in first-appearance order.
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const BenchRow& row = report.rows[t];
    auto it = std::find_if(report.summary.begin(), report.summary.end(), [&](const SolverSummary& s) {
      return s.solver == row.solver && s.mode == row.mode;
    });
    if (it == report.summary.end()) {
      SolverSummary fresh;
      fresh.solver = row.solver;
      fresh.mode = row.mode;
      fresh.theoretical_factor = solver_factor(config.solvers[tasks[t].solver], row.mode);
      report.summary.push_back(fresh);
      it = std::prev(report.summary.end());
    }
    ++it->rows;
    if (row.status != "ok") ++it->errors;
    if (row.ratio) {
      ++it->ratio_rows;
      it->mean_ratio += *row.ratio;
      it->max_ratio = std::max(it->max_ratio, *row.ratio);
    }
  }
  for (SolverSummary& s : report.summary)
    if (s.ratio_rows > 0) s.mean_ratio /= s.ratio_rows;
  return report;
}

std::string bench_csv(const BenchReport& report, bool include_timing) {
  std::ostringstream out;
  out << "format_version,instance,kind,nodes,terminals,edges,mode,solver,seed,status,power,cost,"
         "ratio,iterations,sampled_power,wall_ms\n";
  for (const BenchRow& row : report.rows) {
    out << kBenchFormatVersion << ',' << row.instance << ',' << row.kind << ',' << row.nodes << ','
        << row.terminals << ',' << row.edges << ',' << mode_name(row.mode) << ',' << row.solver
        << ',' << row.seed << ',' << row.status << ',' << optional_cost(row.power) << ','
        << optional_cost(row.cost) << ',' << (row.ratio ? fixed(*row.ratio, 6) : "") << ','
        << (row.iterations ? std::to_string(*row.iterations) : "") << ','
        << optional_cost(row.sampled_power) << ',' << (include_timing ? fixed(row.wall_ms, 3) : "")
        << '\n';
  }
  return out.str();
}

std::string bench_summary(const BenchReport& report) {
  std::ostringstream out;
  out << "solver,mode,rows,errors,ratio_rows,mean_ratio,max_ratio,theoretical_factor\n";
  for (const SolverSummary& s : report.summary) {
    out << s.solver << ',' << mode_name(s.mode) << ',' << s.rows << ',' << s.errors << ','
        << s.ratio_rows << ',' << (s.ratio_rows ? fixed(s.mean_ratio, 6) : "") << ','
        << (s.ratio_rows ? fixed(s.max_ratio, 6) : "") << ',' << fixed(s.theoretical_factor, 6)
        << '\n';
  }
  return out.str();
}

}  // namespace powertree
