#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dhvd/graph.hpp"
#include "dhvd/split_decomposition.hpp"

namespace dhvd::fixtures {

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<Vertex, Vertex>> e(edges.begin(), edges.end());
    return Graph(n, e);
}

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

// center 0
inline Graph star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.build();
}

// square 0-1-2-3, roof 4 on 0 and 1
inline Graph house() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}); }

// path 0-1-2-3, apex 4
inline Graph gem() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

inline Graph domino() { return make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}); }

// Eleven-vertex DH graph: twins 0,1 joined to 2..6, edge 4-5, and the tree
// 6-7, 6-8, 8-9, 8-10 hanging off 6.
inline Graph eleven() {
    return make(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                     {4, 5}, {6, 7}, {6, 8}, {8, 9}, {8, 10}});
}

inline VertexSet set(int n, std::initializer_list<Vertex> vs) {
    return VertexSet::of(n, std::vector<Vertex>(vs));
}

// Every bag is complete, star or prime, and recomposing any single marked edge
// leaves a bag that is none of these (so no merge was missed).
inline bool canonical(const SplitDecomposition& d) {
    for (const Bag& b : d.bags())
        if (b.shape == BagShape::General) return false;
    for (auto [p, q] : d.marked_edges()) {
        const auto merged = recompose(d, p);
        int general = 0;
        for (const Bag& b : merged.bags()) general += b.shape == BagShape::General;
        if (general != 1) return false;
    }
    return true;
}

}  // namespace dhvd::fixtures
