// Serial reference vs OpenMP kernels on fixed seeded inputs.
#include <benchmark/benchmark.h>

#include "powertree/bench.hpp"
#include "powertree/components.hpp"
#include "powertree/generators.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/witness.hpp"

using namespace powertree;

namespace {

Instance sample_instance(int nodes, int terminals) {
  GeneratorParams params;
  params.nodes = nodes;
  params.terminals = terminals;
  params.seed = 7;
  params.density = 0.5;
  return generate(GeneratorKind::kUniformRandom, params);
}

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_EnumerateColumns(benchmark::State& state) {
  const Instance instance = sample_instance(10, 7);
  const ComponentOracle oracle(instance);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_columns(oracle, 3, mode_of(state)));
}

void BM_TerminalFlows(benchmark::State& state) {
  const Instance instance = sample_instance(12, 8);
  const ColumnSet columns = enumerate_columns(instance, 3);
  const std::vector<double> x(columns.columns.size(), 0.05);
  for (auto _ : state)
    benchmark::DoNotOptimize(terminal_flows(instance, columns, x, mode_of(state)));
}

void BM_WitnessStats(benchmark::State& state) {
  Rng rng(11);
  const Tree tree = random_full_component(rng, 12, 3, 5, 20);
  NodeId v = 0;
  while (tree.degree(v) < 3) ++v;
  for (auto _ : state)
    benchmark::DoNotOptimize(witness_stats(tree, v, 1, 2000, 5, mode_of(state)));
}

void BM_BenchPool(benchmark::State& state) {
  const BenchConfig config = parse_bench_config(
      "seed = 3\n"
      "instance kind=uniform-random nodes=7 terminals=7 count=4 spanning=true\n"
      "solver exact\n"
      "solver mst\n"
      "solver irr k=3\n");
  for (auto _ : state) benchmark::DoNotOptimize(run_bench(config, mode_of(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the parallel kernel.
BENCHMARK(BM_EnumerateColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TerminalFlows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessStats)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchPool)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
