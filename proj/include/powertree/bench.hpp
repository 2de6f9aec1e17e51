#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powertree/generators.hpp"
#include "powertree/parallel.hpp"
#include "powertree/reference_solvers.hpp"

namespace powertree {

// One `instance` line: `count` instances drawn from one generator.
struct InstanceStanza {
  GeneratorKind kind = GeneratorKind::kUniformRandom;
  GeneratorParams params;  // params.seed is replaced per instance
  int count = 1;
  TreeMode mode = TreeMode::kSteiner;
};

// One `solver` line. name: exact, exact-dp, mst, steiner-cost or irr.
struct SolverStanza {
  std::string name;
  int k = 3;
  int repeat = 1;
  int max_iters = 0;  // 0: 50 * edge count

  std::string label() const;
};

struct BenchConfig {
  std::uint64_t seed = 1;
  std::vector<InstanceStanza> instances;
  std::vector<SolverStanza> solvers;
};

// Format:
//   # comment
//   seed = 42
//   instance kind=uniform-random nodes=8 terminals=4 count=10 spanning=true
//   solver exact
//   solver irr k=3 repeat=2 max_iters=400
// Instance keys: kind, nodes, terminals, count, density, max_cost, exponent,
// grid, low, high, spanning. Throws kMalformedLine / kInvalidArgument.
BenchConfig parse_bench_config(std::string_view text);
BenchConfig read_bench_config(const std::string& path);

struct BenchRow {
  int instance = 0;
  std::string kind;
  int nodes = 0;
  int terminals = 0;
  int edges = 0;
  TreeMode mode = TreeMode::kSteiner;
  std::string solver;
  std::uint64_t seed = 0;
  std::string status;  // "ok" or an error code name
  std::optional<Rational> power;
  std::optional<Rational> cost;
  std::optional<double> ratio;  // power / exact power of the same instance
  std::optional<int> iterations;
  std::optional<Rational> sampled_power;
  double wall_ms = 0;
};

struct SolverSummary {
  std::string solver;
  TreeMode mode = TreeMode::kSteiner;
  int rows = 0;
  int errors = 0;
  int ratio_rows = 0;
  double mean_ratio = 0;
  double max_ratio = 0;
  double theoretical_factor = 0;  // guarantee of the solver family, for context
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<SolverSummary> summary;
};

inline constexpr int kBenchFormatVersion = 1;

// Rows are ordered instance-major, then solver stanza, then repeat. Row r is
// seeded with derive_seed(derive_seed(seed, 1), r) and instance i with
// derive_seed(seed, i), so the report does not depend on the thread count.
BenchReport run_bench(const BenchConfig& config, Execution execution = Execution::kParallel);

// wall_ms is the only non-deterministic column; include_timing=false writes it
// as empty for golden comparisons.
std::string bench_csv(const BenchReport& report, bool include_timing = true);
std::string bench_summary(const BenchReport& report);

}  // namespace powertree
