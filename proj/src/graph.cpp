#include "dhvd/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace dhvd {

Graph::Graph(int n) : adj_(n), rows_(n, VertexSet(n)) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (rows_[u].contains(v))
            throw std::invalid_argument("parallel edge " + std::to_string(u) + " " + std::to_string(v));
        rows_[u].insert(v);
        rows_[v].insert(u);
        ++edge_count_;
    }
    for (Vertex v = 0; v < n; ++v) adj_[v] = rows_[v].to_vector();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
    rows_[u].erase(v);
    rows_[v].erase(u);
}

Graph GraphBuilder::build() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) edges.emplace_back(u, v);
    return Graph(order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.order())
        throw std::domain_error("vertex set universe does not match graph order");
    InducedSubgraph out;
    out.from_parent.assign(g.order(), -1);
    out.to_parent = a.to_vector();
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : out.to_parent)
        for (Vertex v : g.neighbors(u))
            if (u < v && a.contains(v)) edges.emplace_back(out.from_parent[u], out.from_parent[v]);
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    std::vector<Vertex> stack;
    for (Vertex s = within.first(); s >= 0; s = within.next(s + 1)) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.order());
        stack.push_back(s);
        seen.insert(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex w : g.neighbors(v)) {
                if (within.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.all()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet& within) {
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex s = sources.first(); s >= 0; s = sources.next(s + 1)) {
        if (!within.contains(s)) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (within.contains(w) && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::domain_error("are_twins needs two distinct vertices");
    VertexSet nu = g.neighbor_set(u);
    VertexSet nv = g.neighbor_set(v);
    nu.erase(v);
    nv.erase(u);
    return nu == nv;
}

TwinClassPartition twin_classes(const Graph& g, const VertexSet& s) {
    TwinClassPartition out;
    out.class_of.assign(g.order(), -1);
    const VertexSet rest = g.all() - s;
    const auto comps = connected_components(g, rest);
    std::vector<int> comp_of(g.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c].to_vector()) comp_of[v] = static_cast<int>(c);

    for (Vertex v = rest.first(); v >= 0; v = rest.next(v + 1)) {
        if (out.class_of[v] >= 0) continue;
        TwinClass tc;
        tc.members = VertexSet(g.order());
        tc.members.insert(v);
        tc.component = comp_of[v];
        const int id = static_cast<int>(out.classes.size());
        out.class_of[v] = id;
        for (Vertex u = rest.next(v + 1); u >= 0; u = rest.next(u + 1)) {
            if (out.class_of[u] < 0 && comp_of[u] == comp_of[v] && are_twins(g, u, v)) {
                tc.members.insert(u);
                out.class_of[u] = id;
            }
        }
        tc.s_attached = g.neighbor_set(v).intersects(s);
        out.classes.push_back(std::move(tc));
    }
    return out;
}

int component_count(const Graph& g, const VertexSet& s) {
    return static_cast<int>(connected_components(g, s).size());
}

}  // namespace dhvd
