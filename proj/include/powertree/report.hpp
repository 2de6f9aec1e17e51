#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "powertree/analysis.hpp"
#include "powertree/components.hpp"
#include "powertree/decomposition.hpp"
#include "powertree/errors.hpp"
#include "powertree/irr_solver.hpp"
#include "powertree/lp_relax.hpp"
#include "powertree/path_power.hpp"
#include "powertree/witness.hpp"

namespace powertree {

using Json = nlohmann::ordered_json;

// Costs are written as exact decimal strings ("2.5", or "p/q" when the
// fraction does not terminate).
Json power_tree_json(const Instance& instance, const PowerTree& tree, const std::string& solver,
                     std::optional<std::uint64_t> seed = std::nullopt);
Json path_json(const PathResult& path);
Json component_json(const Component& component);
Json decomposition_json(const Decomposition& decomposition);
Json h_power_json(const HPowerResult& result, int h);
Json lp_json(const ColumnSet& columns, const LpState& state);
Json iteration_json(const IterationRecord& record, int index);
Json classification_json(const Tree& tree, const EdgeClassification& classes);
Json witness_stats_json(const WitnessStats& stats);
Json error_json(const Error& error);

}  // namespace powertree
