#include "powertree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "powertree/errors.hpp"
#include "powertree/rng.hpp"

namespace powertree {

namespace {

std::vector<NodeId> pick_terminals(Rng& rng, int nodes, int count) {
  std::vector<NodeId> order(nodes);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(uniform_below(rng, nodes - i));
    std::swap(order[i], order[j]);
  }
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

// Random spanning tree plus independent extra pairs; returns the pairs.
std::vector<std::pair<NodeId, NodeId>> random_topology(Rng& rng, int nodes,
                                                       double density) {
  std::vector<NodeId> perm(nodes);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = nodes - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
  }
  std::vector<std::vector<char>> adj(nodes, std::vector<char>(nodes, 0));
  for (int i = 1; i < nodes; ++i) {
    const NodeId a = perm[i];
    const NodeId b = perm[uniform_below(rng, i)];
    adj[a][b] = adj[b][a] = 1;
  }
  for (NodeId a = 0; a < nodes; ++a) {
    for (NodeId b = a + 1; b < nodes; ++b) {
      const bool extra = uniform_unit(rng) < density;
      if (extra) adj[a][b] = adj[b][a] = 1;
    }
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < nodes; ++a) {
    for (NodeId b = a + 1; b < nodes; ++b) {
      if (adj[a][b]) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

Rational power_law_cost(std::int64_t squared_distance, double exponent) {
  const double half = exponent / 2.0;
  if (half == std::floor(half) && half >= 0 && half <= 3) {
    std::int64_t value = 1;
    for (int i = 0; i < static_cast<int>(half); ++i) {
      value = checked_mul(value, squared_distance);
    }
    return Rational(value);
  }
  const double cost = std::pow(static_cast<double>(squared_distance), half);
  return Rational(static_cast<std::int64_t>(std::llround(cost * 1e6)), 1000000);
}

std::vector<std::pair<std::int64_t, std::int64_t>> draw_points(
    Rng& rng, const GeneratorParams& params) {
  std::vector<std::pair<std::int64_t, std::int64_t>> points(params.nodes);
  for (auto& [x, y] : points) {
    x = static_cast<std::int64_t>(uniform_below(rng, params.grid));
    y = static_cast<std::int64_t>(uniform_below(rng, params.grid));
  }
  return points;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> euclidean_points(
    const GeneratorParams& params) {
  Rng rng(params.seed);
  pick_terminals(rng, params.nodes, params.terminals);
  return draw_points(rng, params);
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "uniform-random") return GeneratorKind::kUniformRandom;
  if (name == "euclidean-powerlaw") return GeneratorKind::kEuclideanPowerlaw;
  if (name == "two-level") return GeneratorKind::kTwoLevel;
  if (name == "reduction-wrapped") return GeneratorKind::kReductionWrapped;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown generator '" + std::string(name) + "'");
}

std::string_view generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kUniformRandom: return "uniform-random";
    case GeneratorKind::kEuclideanPowerlaw: return "euclidean-powerlaw";
    case GeneratorKind::kTwoLevel: return "two-level";
    case GeneratorKind::kReductionWrapped: return "reduction-wrapped";
  }
  return "unknown";
}

Instance generate(GeneratorKind kind, const GeneratorParams& params) {
  if (params.nodes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "node count must be positive");
  }
  if (params.terminals < 1 || params.terminals > params.nodes) {
    throw Error(ErrorCode::kInvalidArgument,
                "terminal count must lie in [1, node count]");
  }
  if (kind == GeneratorKind::kTwoLevel && !(params.low >= 0 && params.low < params.high)) {
    throw Error(ErrorCode::kInvalidArgument, "two-level costs need 0 <= a < b");
  }
  if (params.max_cost < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max cost must be positive");
  }
  Rng rng(params.seed);
  const std::vector<NodeId> terminals = pick_terminals(rng, params.nodes, params.terminals);
  std::vector<Edge> edges;
  switch (kind) {
    case GeneratorKind::kUniformRandom:
    case GeneratorKind::kReductionWrapped:
      for (auto [a, b] : random_topology(rng, params.nodes, params.density)) {
        edges.push_back({a, b, Rational(1 + static_cast<std::int64_t>(
                                                uniform_below(rng, params.max_cost)))});
      }
      break;
    case GeneratorKind::kTwoLevel:
      for (auto [a, b] : random_topology(rng, params.nodes, params.density)) {
        edges.push_back({a, b, uniform_below(rng, 2) == 0 ? params.low : params.high});
      }
      break;
    case GeneratorKind::kEuclideanPowerlaw: {
      const auto points = draw_points(rng, params);
      for (NodeId a = 0; a < params.nodes; ++a) {
        for (NodeId b = a + 1; b < params.nodes; ++b) {
          const std::int64_t dx = points[a].first - points[b].first;
          const std::int64_t dy = points[a].second - points[b].second;
          edges.push_back({a, b, power_law_cost(dx * dx + dy * dy, params.exponent)});
        }
      }
      break;
    }
  }
  Instance instance(params.nodes, std::move(edges), terminals, terminals.front());
  if (kind == GeneratorKind::kReductionWrapped) return reduce_cost_to_power(instance);
  return instance;
}

}  // namespace powertree
