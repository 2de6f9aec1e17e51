#include "powertree/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "powertree/errors.hpp"
#include "powertree/union_find.hpp"

namespace powertree {

namespace {

std::string node_label(NodeId v) { return std::to_string(v); }

}  // namespace

Instance::Instance(int node_count, std::vector<Edge> edges,
                   std::vector<NodeId> terminals, NodeId root)
    : node_count_(node_count), edges_(std::move(edges)), root_(root) {
  if (node_count_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "node count must be positive");
  }
  auto check_node = [&](NodeId v, const char* what) {
    if (v < 0 || v >= node_count_) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  std::string(what) + " id " + node_label(v) + " out of range [0, " +
                      std::to_string(node_count_) + ")");
    }
  };
  adjacency_.assign(node_count_, {});
  std::set<std::pair<NodeId, NodeId>> seen;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& edge = edges_[e];
    check_node(edge.u, "edge endpoint");
    check_node(edge.v, "edge endpoint");
    if (edge.u == edge.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at node " + node_label(edge.u));
    }
    if (edge.cost < 0) {
      throw Error(ErrorCode::kNegativeCost, "negative cost on edge " +
                                                node_label(edge.u) + "-" +
                                                node_label(edge.v));
    }
    const auto key = std::minmax(edge.u, edge.v);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + node_label(key.first) +
                                                 "-" + node_label(key.second));
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }
  if (terminals.empty()) {
    throw Error(ErrorCode::kMissingDirective, "terminal set is empty");
  }
  for (NodeId t : terminals) check_node(t, "terminal");
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  terminals_ = std::move(terminals);
  check_node(root_, "root");
  is_terminal_.assign(node_count_, 0);
  for (NodeId t : terminals_) is_terminal_[t] = 1;
  if (!is_terminal_[root_]) {
    throw Error(ErrorCode::kRootNotTerminal,
                "root not a terminal: " + node_label(root_));
  }
  UnionFind uf(node_count_);
  for (const Edge& edge : edges_) uf.unite(edge.u, edge.v);
  for (NodeId t : terminals_) {
    if (!uf.same(t, root_)) {
      throw Error(ErrorCode::kDisconnectedTerminals,
                  "terminal " + node_label(t) + " is disconnected from root " +
                      node_label(root_));
    }
  }
  for (const Edge& edge : edges_) {
    scale_ = checked_lcm(scale_, edge.cost.denominator());
  }
  units_.reserve(edges_.size());
  for (const Edge& edge : edges_) {
    units_.push_back(checked_mul(edge.cost.numerator(), scale_ / edge.cost.denominator()));
  }
}

std::optional<EdgeId> Instance::find_edge(NodeId a, NodeId b) const {
  const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a]
                                                                   : adjacency_[b];
  const NodeId target = &list == &adjacency_[a] ? b : a;
  for (const Incidence& inc : list) {
    if (inc.to == target) return inc.edge;
  }
  return std::nullopt;
}

Instance Instance::with_zeroed(std::span<const EdgeId> edges) const {
  std::vector<Edge> copy = edges_;
  for (EdgeId e : edges) copy.at(e).cost = 0;
  return Instance(node_count_, std::move(copy), terminals_, root_);
}

Instance Instance::with_terminals(std::vector<NodeId> terminals, NodeId root) const {
  return Instance(node_count_, edges_, std::move(terminals), root);
}

Instance Instance::as_spanning() const {
  std::vector<NodeId> all(node_count_);
  for (NodeId v = 0; v < node_count_; ++v) all[v] = v;
  return Instance(node_count_, edges_, std::move(all), root_);
}

Units power_units(const Instance& instance, std::span<const EdgeId> edges) {
  std::vector<Units> best(instance.node_count(), 0);
  for (EdgeId e : edges) {
    const Edge& edge = instance.edge(e);
    best[edge.u] = std::max(best[edge.u], instance.units(e));
    best[edge.v] = std::max(best[edge.v], instance.units(e));
  }
  Units total = 0;
  for (Units b : best) total = checked_add(total, b);
  return total;
}

Units cost_units(const Instance& instance, std::span<const EdgeId> edges) {
  Units total = 0;
  for (EdgeId e : edges) total = checked_add(total, instance.units(e));
  return total;
}

PowerTree evaluate(const Instance& instance, std::span<const EdgeId> edges) {
  PowerTree tree;
  tree.edges.assign(edges.begin(), edges.end());
  std::sort(tree.edges.begin(), tree.edges.end());
  if (std::adjacent_find(tree.edges.begin(), tree.edges.end()) != tree.edges.end()) {
    throw Error(ErrorCode::kCyclicEdgeSet, "edge listed twice");
  }
  UnionFind uf(instance.node_count());
  std::vector<char> touched(instance.node_count(), 0);
  for (EdgeId e : tree.edges) {
    if (e < 0 || e >= instance.edge_count()) {
      throw Error(ErrorCode::kInvalidArgument, "edge id " + std::to_string(e) +
                                                   " out of range");
    }
    const Edge& edge = instance.edge(e);
    if (!uf.unite(edge.u, edge.v)) {
      throw Error(ErrorCode::kCyclicEdgeSet,
                  "edge set has a cycle through edge " + std::to_string(e));
    }
    touched[edge.u] = touched[edge.v] = 1;
  }
  const NodeId anchor = instance.root();
  touched[anchor] = 1;
  for (NodeId t : instance.terminals()) {
    if (!touched[t]) {
      throw Error(ErrorCode::kTerminalNotCovered,
                  "terminal " + std::to_string(t) + " not covered");
    }
  }
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    if (touched[v] && !uf.same(v, anchor)) {
      throw Error(ErrorCode::kDisconnectedEdgeSet,
                  "edge set is not connected (node " + std::to_string(v) + ")");
    }
  }
  std::vector<Units> best(instance.node_count(), 0);
  Units cost = 0;
  for (EdgeId e : tree.edges) {
    const Edge& edge = instance.edge(e);
    best[edge.u] = std::max(best[edge.u], instance.units(e));
    best[edge.v] = std::max(best[edge.v], instance.units(e));
    cost = checked_add(cost, instance.units(e));
  }
  Units power = 0;
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    if (!touched[v]) continue;
    tree.node_powers.emplace(v, instance.to_cost(best[v]));
    power = checked_add(power, best[v]);
  }
  tree.total_power = instance.to_cost(power);
  tree.total_cost = instance.to_cost(cost);
  return tree;
}

Instance parse_instance(std::string_view text) {
  std::optional<int> nodes;
  std::optional<NodeId> root;
  std::vector<Edge> edges;
  std::vector<NodeId> terminals;
  bool saw_terminals = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kMalformedLine,
                 "line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_id = [&](const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (...) {
      throw fail("invalid node id '" + token + "'");
    }
    if (used != token.size()) throw fail("invalid node id '" + token + "'");
    if (value < 0 || value > INT32_MAX) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "line " + std::to_string(line_no) + ": node id " + token +
                      " out of range");
    }
    return static_cast<NodeId>(value);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];
    if (directive == "nodes") {
      if (tokens.size() != 2) throw fail("expected 'nodes <n>'");
      if (nodes) throw fail("duplicate 'nodes' directive");
      nodes = parse_id(tokens[1]);
    } else if (directive == "edge") {
      if (tokens.size() != 4) throw fail("expected 'edge <u> <v> <cost>'");
      Rational cost;
      try {
        cost = parse_cost(tokens[3]);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      }
      edges.push_back({parse_id(tokens[1]), parse_id(tokens[2]), cost});
    } else if (directive == "terminals") {
      if (tokens.size() < 2) throw fail("expected 'terminals <t1> ...'");
      saw_terminals = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) terminals.push_back(parse_id(tokens[i]));
    } else if (directive == "root") {
      if (tokens.size() != 2) throw fail("expected 'root <r>'");
      if (root) throw fail("duplicate 'root' directive");
      root = parse_id(tokens[1]);
    } else {
      throw fail("unknown directive '" + directive + "'");
    }
  }
  if (!nodes) throw Error(ErrorCode::kMissingDirective, "missing 'nodes' directive");
  if (!saw_terminals) {
    throw Error(ErrorCode::kMissingDirective, "missing 'terminals' directive");
  }
  if (!root) throw Error(ErrorCode::kMissingDirective, "missing 'root' directive");
  return Instance(*nodes, std::move(edges), std::move(terminals), *root);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "nodes " << instance.node_count() << "\n";
  for (const Edge& edge : instance.edges()) {
    out << "edge " << edge.u << " " << edge.v << " " << format_cost(edge.cost) << "\n";
  }
  out << "terminals";
  for (NodeId t : instance.terminals()) out << " " << t;
  out << "\nroot " << instance.root() << "\n";
  return out.str();
}

Instance reduce_cost_to_power(const Instance& instance) {
  std::vector<Edge> edges;
  edges.reserve(3 * instance.edges().size());
  NodeId next = instance.node_count();
  for (const Edge& edge : instance.edges()) {
    const NodeId x = next++;
    const NodeId y = next++;
    edges.push_back({edge.u, x, Rational(0)});
    edges.push_back({x, y, edge.cost / 2});
    edges.push_back({y, edge.v, Rational(0)});
  }
  return Instance(next, std::move(edges), instance.terminals(), instance.root());
}

}  // namespace powertree
