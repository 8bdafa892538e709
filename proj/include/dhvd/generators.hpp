#pragma once

#include <cstdint>
#include <vector>

#include "dhvd/graph.hpp"

namespace dhvd {

/// SplitMix64. Seed 1234567 yields 6457827717110365317, 3203168211198807973,
/// 9817491932198370423, ...
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Top 53 bits scaled into [0, 1).
    double uniform01();
    /// next() % bound; bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// G(n, p): pairs (u, v), u < v, visited in lexicographic order, each kept
/// when uniform01() < p.
Graph random_graph(int n, double p, std::uint64_t seed);

struct PlantedInstance {
    Graph graph;
    /// Noise vertices; deleting them leaves a DH graph.
    std::vector<Vertex> planted;
    /// The DH core before noise and relabelling.
    Graph core;
};

/// DH core grown by pendant / true-twin / false-twin steps, plus k_noise
/// vertices each joined to every earlier vertex with probability 1/2, then
/// randomly relabelled.
PlantedInstance gen_planted(int n_dh, int k_noise, std::uint64_t seed);

/// Replaces each edge uv of `base` by the paths u-a-b-v and u-c-d-v; the new
/// vertices of the i-th edge (in edges() order) are n + 4i .. n + 4i + 3.
Graph gen_vc_gadget(const Graph& base);

}  // namespace dhvd
