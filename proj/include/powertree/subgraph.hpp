#pragma once

#include <span>
#include <vector>

#include "powertree/instance.hpp"

namespace powertree {

// Edges removed until only required nodes are leaves; `edges` must be a
// forest in which the required nodes are connected.
std::vector<EdgeId> strip_optional_leaves(const Instance& instance, std::vector<EdgeId> edges,
                                          std::span<const NodeId> required);

// A tree inside `edges` (scanned in ascending id order) that connects the
// required nodes and has only required leaves. Throws kDisconnectedEdgeSet if
// the required nodes are not connected by `edges`.
std::vector<EdgeId> subtree_spanning(const Instance& instance, std::span<const EdgeId> edges,
                                     std::span<const NodeId> required);

// True iff the required nodes lie in one component of the given edges.
bool connects(const Instance& instance, std::span<const EdgeId> edges,
              std::span<const NodeId> required);

}  // namespace powertree
