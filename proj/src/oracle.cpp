#include "dhvd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "dhvd/recognition.hpp"

namespace dhvd {

std::vector<Split> enumerate_splits(const Graph& g) {
    const int n = g.order();
    if (n > 14) throw std::domain_error("enumerate_splits is limited to 14 vertices");
    if (!is_connected(g)) throw std::domain_error("enumerate_splits needs a connected graph");
    std::vector<Split> out;
    if (n < 4) return out;
    // Vertex 0 is always in X; bit i of `mask` places vertex i + 1.
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        VertexSet x(n);
        x.insert(0);
        for (int i = 0; i + 1 < n; ++i)
            if ((mask >> i) & 1u) x.insert(i + 1);
        if (!is_split(g, x)) continue;
        out.push_back(Split{x.to_vector(), (g.all() - x).to_vector()});
    }
    return out;
}

bool exhaustive_is_dh(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::domain_error("exhaustive_is_dh is limited to 10 vertices");
    std::vector<std::vector<int>> dist(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet src(n);
        src.insert(v);
        dist[v] = bfs_distances(g, src, g.all());
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet h(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) h.insert(i);
        if (connected_components(g, h).size() != 1) continue;
        for (Vertex v = h.first(); v >= 0; v = h.next(v + 1)) {
            VertexSet src(n);
            src.insert(v);
            const auto inside = bfs_distances(g, src, h);
            for (Vertex w = h.first(); w >= 0; w = h.next(w + 1))
                if (inside[w] != dist[v][w]) return false;
        }
    }
    return true;
}

namespace {

bool hit_obstructions(const Graph& g, const VertexSet& forbidden, VertexSet& removed, int budget) {
    const auto sub = induced_subgraph(g, g.all() - removed);
    const auto obs = find_obstruction(sub.graph);
    if (!obs) return true;
    if (budget == 0) return false;
    for (Vertex local : obs->vertices) {
        const Vertex v = sub.to_parent[local];
        if (forbidden.contains(v)) continue;
        removed.insert(v);
        if (hit_obstructions(g, forbidden, removed, budget - 1)) return true;
        removed.erase(v);
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> branching_min_dhvd(const Graph& g, const VertexSet& forbidden, int max_k) {
    for (int k = 0; k <= max_k; ++k) {
        VertexSet removed(g.order());
        if (hit_obstructions(g, forbidden, removed, k)) return removed.to_vector();
    }
    return std::nullopt;
}

std::vector<Vertex> brute_force_vertex_cover(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::domain_error("brute_force_vertex_cover is limited to 20 vertices");
    const auto edges = g.edges();
    std::uint32_t best = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) >= std::popcount(best)) continue;
        bool covers = true;
        for (auto [u, v] : edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
                covers = false;
                break;
            }
        if (covers) best = mask;
    }
    std::vector<Vertex> out;
    for (int i = 0; i < n; ++i)
        if ((best >> i) & 1u) out.push_back(i);
    return out;
}

}  // namespace dhvd
