#pragma once

#include <optional>
#include <vector>

#include "dhvd/graph.hpp"

namespace dhvd {

enum class ObstructionKind { House, Gem, Domino, Hole };

const char* to_string(ObstructionKind kind);

/// Induced witness of non-distance-heredity.
/// House/gem/domino vertices follow the template order below; hole vertices
/// are listed in cyclic order.
///   house:  0-1-2-3-0 square, roof 4 on 0 and 1
///   gem:    path 0-1-2-3, apex 4 on all four
///   domino: 0-1-2 over 3-4-5, rungs 0-3, 1-4, 2-5
struct Obstruction {
    ObstructionKind kind = ObstructionKind::Hole;
    std::vector<Vertex> vertices;

    bool small() const { return vertices.size() <= 6; }
};

/// Every induced path is a shortest path. Exhaustive; throws std::domain_error
/// for graphs with more than 10 vertices.
bool is_dh_by_distances(const Graph& g);

/// Every bag of every component's canonical split decomposition is a star or complete.
bool is_dh_by_bags(const Graph& g);

/// Repeatedly strips pendant/isolated vertices and one of each twin pair;
/// g is DH iff at most one vertex survives.
bool is_dh_by_pruning(const Graph& g);

/// is_dh_by_pruning on g[within].
bool is_dh_within(const Graph& g, const VertexSet& within);

/// True iff `obs` is an induced copy of its claimed kind in g.
bool verify_obstruction(const Graph& g, const Obstruction& obs);

/// Recognizes g[vertices] as exactly one obstruction, or nullopt.
std::optional<Obstruction> classify_obstruction(const Graph& g, std::span<const Vertex> vertices);

/// nullopt iff g is DH. Small obstructions are preferred: 5- and 6-vertex sets
/// are scanned first when g has at most 16 vertices; otherwise (or when none is
/// small) a vertex-minimal non-DH induced subgraph is extracted greedily.
std::optional<Obstruction> find_obstruction(const Graph& g);

/// Greedily shrinks a non-DH set to an inclusion-minimal one (an obstruction).
/// Vertices of `keep_last` are tried for removal after all others.
std::optional<Obstruction> minimal_obstruction_within(const Graph& g, const VertexSet& within,
                                                      const VertexSet& keep_last);

struct SmallObstructionHit {
    VertexSet x;
    Obstruction obstruction;
};

/// Smallest (then lexicographically smallest) X outside s with |X| <= 5 and
/// g[s + X] not DH, together with an obstruction inside g[s + X].
/// Throws std::domain_error unless g[s] and g - s are both DH.
std::optional<SmallObstructionHit> find_small_obstruction_with(const Graph& g, const VertexSet& s);

/// Same search without the precondition checks; used on the solver's hot path.
std::optional<VertexSet> find_small_obstruction_set(const Graph& g, const VertexSet& s, int max_size = 5);

}  // namespace dhvd
