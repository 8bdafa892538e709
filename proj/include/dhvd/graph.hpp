#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dhvd {

using Vertex = int;

/// Fixed-universe set of vertices backed by a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::span<const Vertex> members) {
        VertexSet s(universe);
        for (Vertex v : members) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Smallest member, or -1.
    Vertex first() const { return next(0); }
    /// Smallest member >= from, or -1.
    Vertex next(Vertex from) const {
        if (from >= universe_) return -1;
        std::size_t i = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on self-loops, parallel edges or
    /// out-of-range endpoints.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    VertexSet all() const { return VertexSet::full(order()); }
    VertexSet none() const { return VertexSet(order()); }

    /// Label-sensitive equality.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexSet> rows_;
    int edge_count_ = 0;
};

/// Incremental edge collector; duplicate insertions are ignored.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : rows_(n, VertexSet(n)) {}
    int order() const { return static_cast<int>(rows_.size()); }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    Graph build() const;

private:
    std::vector<VertexSet> rows_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the parent vertex mapped to vertex i (ascending).
    std::vector<Vertex> to_parent;
    /// from_parent[v] is the new id of parent vertex v, or -1.
    std::vector<Vertex> from_parent;
};

/// Throws std::domain_error if `a` is not over g's vertex universe.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a);

/// Components ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of g[within], same ordering.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

/// BFS distances from a source set inside g[within]; -1 when unreachable.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet& within);

/// Throws std::domain_error when u == v.
bool are_twins(const Graph& g, Vertex u, Vertex v);

struct TwinClass {
    VertexSet members;
    bool s_attached = false;
    /// Index into connected_components(g, V - s).
    int component = -1;
};

struct TwinClassPartition {
    std::vector<TwinClass> classes;
    /// class_of[v] for v outside s, -1 for v in s.
    std::vector<int> class_of;
};

/// Twin classes (twins in the full graph) of V(g) - s, split per component of g - s.
TwinClassPartition twin_classes(const Graph& g, const VertexSet& s);

/// Number of connected components of g[s].
int component_count(const Graph& g, const VertexSet& s);

}  // namespace dhvd
