#include "dhvd/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhvd {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

PlantedInstance gen_planted(int n_dh, int k_noise, std::uint64_t seed) {
    if (n_dh < 1 || k_noise < 0) throw std::invalid_argument("need n_dh >= 1 and k_noise >= 0");
    SplitMix64 rng(seed);
    const int n = n_dh + k_noise;
    GraphBuilder b(n);
    std::vector<std::vector<Vertex>> nbrs(n);
    auto link = [&](Vertex u, Vertex v) {
        b.add_edge(u, v);
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
    };
    for (Vertex v = 1; v < n_dh; ++v) {
        const auto op = rng.below(3);
        const auto target = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
        const auto copy = nbrs[target];
        if (op == 0) {
            link(v, target);
        } else {
            for (Vertex w : copy) link(v, w);
            if (op == 1) link(v, target);
        }
    }
    GraphBuilder core(n_dh);
    for (Vertex u = 0; u < n_dh; ++u)
        for (Vertex w : nbrs[u])
            if (u < w) core.add_edge(u, w);
    for (Vertex v = n_dh; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (rng.uniform01() < 0.5) link(v, u);

    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    const Graph raw = b.build();
    for (auto [u, v] : raw.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(edges.begin(), edges.end());

    PlantedInstance out{Graph(n, edges), {}, core.build()};
    for (Vertex v = n_dh; v < n; ++v) out.planted.push_back(perm[v]);
    std::sort(out.planted.begin(), out.planted.end());
    return out;
}

Graph gen_vc_gadget(const Graph& base) {
    const int n = base.order();
    const auto base_edges = base.edges();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < base_edges.size(); ++i) {
        const auto [u, v] = base_edges[i];
        const Vertex a = n + 4 * static_cast<Vertex>(i);
        edges.insert(edges.end(), {{u, a}, {a, a + 1}, {a + 1, v}, {u, a + 2}, {a + 2, a + 3}, {a + 3, v}});
    }
    return Graph(n + 4 * static_cast<int>(base_edges.size()), edges);
}

}  // namespace dhvd
