#pragma once

#include <optional>
#include <vector>

#include "dhvd/graph.hpp"
#include "dhvd/split_decomposition.hpp"

namespace dhvd {

/// Every split of a connected graph, X always holding vertex 0, by scanning
/// all bipartitions. Throws std::domain_error above 14 vertices or when disconnected.
std::vector<Split> enumerate_splits(const Graph& g);

/// Literal definition: every connected induced subgraph keeps the distances
/// of g. Throws std::domain_error above 10 vertices.
bool exhaustive_is_dh(const Graph& g);

/// Exact minimum DH deletion set avoiding `forbidden`, by iterative deepening
/// over obstruction hitting (branch on every vertex of some obstruction).
/// Suited to larger sparse graphs; nullopt if the minimum exceeds max_k.
std::optional<std::vector<Vertex>> branching_min_dhvd(const Graph& g, const VertexSet& forbidden, int max_k);

/// Minimum vertex cover by subset enumeration. Throws std::domain_error above 20 vertices.
std::vector<Vertex> brute_force_vertex_cover(const Graph& g);

}  // namespace dhvd
