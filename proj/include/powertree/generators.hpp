#pragma once

#include <cstdint>
#include <string_view>

#include "powertree/instance.hpp"

namespace powertree {

enum class GeneratorKind {
  kUniformRandom,      // connected random graph, integer costs in [1, max_cost]
  kEuclideanPowerlaw,  // complete graph on grid points, cost = distance^exponent
  kTwoLevel,           // random graph with costs in {low, high}
  kReductionWrapped,   // uniform-random instance pushed through the cost-to-power reduction
};

GeneratorKind parse_generator_kind(std::string_view name);
std::string_view generator_kind_name(GeneratorKind kind);

struct GeneratorParams {
  int nodes = 8;
  int terminals = 4;
  std::uint64_t seed = 1;
  double density = 0.4;  // probability of each non-tree pair being an edge
  int max_cost = 10;
  double exponent = 2.0;
  int grid = 32;  // points live on {0..grid-1}^2
  Rational low = 0;
  Rational high = 1;
};

// Deterministic for fixed params. Terminals are a uniform random subset of the
// requested size; the root is the smallest terminal.
Instance generate(GeneratorKind kind, const GeneratorParams& params);

// The point set behind a euclidean-powerlaw instance with the same params.
std::vector<std::pair<std::int64_t, std::int64_t>> euclidean_points(
    const GeneratorParams& params);

}  // namespace powertree
