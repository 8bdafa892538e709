#include "dhvd/recognition.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "dhvd/split_decomposition.hpp"

namespace dhvd {

const char* to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::House: return "house";
        case ObstructionKind::Gem: return "gem";
        case ObstructionKind::Domino: return "domino";
        case ObstructionKind::Hole: return "hole";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pruning recognizer

namespace {

using Words = std::vector<std::uint64_t>;

Words words_of(const VertexSet& s) { return Words(s.words().begin(), s.words().end()); }

void clear_bit(Words& w, Vertex v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

int masked_degree(const Graph& g, Vertex v, const Words& alive) {
    const auto row = g.neighbor_set(v).words();
    int d = 0;
    for (std::size_t i = 0; i < alive.size(); ++i) d += std::popcount(row[i] & alive[i]);
    return d;
}

bool masked_twins(const Graph& g, Vertex u, Vertex v, const Words& alive) {
    const auto a = g.neighbor_set(u).words();
    const auto b = g.neighbor_set(v).words();
    for (std::size_t i = 0; i < alive.size(); ++i) {
        std::uint64_t diff = (a[i] ^ b[i]) & alive[i];
        if (static_cast<std::size_t>(u >> 6) == i) diff &= ~(std::uint64_t{1} << (u & 63));
        if (static_cast<std::size_t>(v >> 6) == i) diff &= ~(std::uint64_t{1} << (v & 63));
        if (diff) return false;
    }
    return true;
}

bool prune_to_empty(const Graph& g, Words alive) {
    std::vector<Vertex> verts;
    for (std::size_t i = 0; i < alive.size(); ++i)
        for (std::uint64_t w = alive[i]; w; w &= w - 1)
            verts.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    std::size_t remaining = verts.size();
    bool changed = true;
    while (remaining > 1 && changed) {
        changed = false;
        std::size_t out = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const Vertex v = verts[i];
            bool removable = masked_degree(g, v, alive) <= 1;
            for (std::size_t j = i + 1; !removable && j < verts.size(); ++j)
                removable = masked_twins(g, v, verts[j], alive);
            if (removable) {
                clear_bit(alive, v);
                --remaining;
                changed = true;
            } else {
                verts[out++] = v;
            }
        }
        verts.resize(out);
    }
    return remaining <= 1;
}

}  // namespace

bool is_dh_within(const Graph& g, const VertexSet& within) { return prune_to_empty(g, words_of(within)); }

bool is_dh_by_pruning(const Graph& g) { return is_dh_within(g, g.all()); }

bool is_dh_by_bags(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        if (comp.count() < 5) continue;
        const auto sub = induced_subgraph(g, comp);
        const auto d = canonical_decomposition(sub.graph);
        for (const auto& bag : d.bags())
            if (bag.shape != BagShape::Star && bag.shape != BagShape::Complete) return false;
    }
    return true;
}

bool is_dh_by_distances(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::domain_error("is_dh_by_distances is limited to 10 vertices");
    std::vector<std::vector<int>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(g, VertexSet::of(n, std::array{v}), g.all());
    // Extends induced paths from `start`; any path longer than the distance fails.
    std::vector<Vertex> path;
    VertexSet blocked(n);
    auto extend = [&](auto&& self, Vertex start) -> bool {
        const Vertex last = path.back();
        const int length = static_cast<int>(path.size()) - 1;
        if (length > dist[start][last]) return false;
        for (Vertex w : g.neighbors(last)) {
            if (blocked.contains(w)) continue;
            // w must not see any path vertex except `last`.
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size() && induced; ++i)
                if (g.adjacent(w, path[i])) induced = false;
            if (!induced) continue;
            path.push_back(w);
            blocked.insert(w);
            const bool ok = self(self, start);
            blocked.erase(w);
            path.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        blocked = VertexSet(n);
        blocked.insert(s);
        if (!extend(extend, s)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Templates

namespace {

struct Template {
    ObstructionKind kind;
    int size;
    std::vector<std::pair<int, int>> edges;
};

const std::array<Template, 3>& templates() {
    static const std::array<Template, 3> t{{
        {ObstructionKind::House, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}},
        {ObstructionKind::Gem, 5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}},
        {ObstructionKind::Domino, 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}},
    }};
    return t;
}

bool template_adjacent(const Template& t, int a, int b) {
    for (auto [x, y] : t.edges)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

bool matches_in_order(const Graph& g, const Template& t, std::span<const Vertex> vs) {
    for (int a = 0; a < t.size; ++a)
        for (int b = a + 1; b < t.size; ++b)
            if (g.adjacent(vs[a], vs[b]) != template_adjacent(t, a, b)) return false;
    return true;
}

int induced_edge_count(const Graph& g, std::span<const Vertex> vs) {
    int m = 0;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) m += g.adjacent(vs[a], vs[b]);
    return m;
}

std::optional<std::vector<Vertex>> cycle_order(const Graph& g, std::span<const Vertex> vs) {
    const std::size_t n = vs.size();
    if (n < 3 || induced_edge_count(g, vs) != static_cast<int>(n)) return std::nullopt;
    std::vector<Vertex> order{vs[0]};
    std::vector<char> used(n, 0);
    used[0] = 1;
    while (order.size() < n) {
        bool advanced = false;
        for (std::size_t i = 0; i < n && !advanced; ++i) {
            if (!used[i] && g.adjacent(order.back(), vs[i])) {
                used[i] = 1;
                order.push_back(vs[i]);
                advanced = true;
            }
        }
        if (!advanced) return std::nullopt;
    }
    if (!g.adjacent(order.back(), order.front())) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        int d = 0;
        for (std::size_t j = 0; j < n; ++j) d += (i != j && g.adjacent(vs[i], vs[j]));
        if (d != 2) return std::nullopt;
    }
    return order;
}

}  // namespace

std::optional<Obstruction> classify_obstruction(const Graph& g, std::span<const Vertex> vertices) {
    const int size = static_cast<int>(vertices.size());
    if (size < 5) return std::nullopt;
    for (const Template& t : templates()) {
        if (t.size != size || induced_edge_count(g, vertices) != static_cast<int>(t.edges.size())) continue;
        std::vector<Vertex> perm(vertices.begin(), vertices.end());
        std::sort(perm.begin(), perm.end());
        do {
            if (matches_in_order(g, t, perm)) return Obstruction{t.kind, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (auto order = cycle_order(g, vertices)) return Obstruction{ObstructionKind::Hole, std::move(*order)};
    return std::nullopt;
}

bool verify_obstruction(const Graph& g, const Obstruction& obs) {
    const auto& vs = obs.vertices;
    for (Vertex v : vs)
        if (v < 0 || v >= g.order()) return false;
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (obs.kind == ObstructionKind::Hole) {
        const std::size_t n = vs.size();
        if (n < 5) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
            }
        return true;
    }
    for (const Template& t : templates())
        if (t.kind == obs.kind) return static_cast<int>(vs.size()) == t.size && matches_in_order(g, t, vs);
    return false;
}

std::optional<Obstruction> minimal_obstruction_within(const Graph& g, const VertexSet& within,
                                                      const VertexSet& keep_last) {
    if (is_dh_within(g, within)) return std::nullopt;
    VertexSet current = within;
    auto shrink = [&](const VertexSet& candidates) {
        const auto order = candidates.to_vector();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (!current.contains(*it)) continue;
            current.erase(*it);
            if (is_dh_within(g, current)) current.insert(*it);
        }
    };
    shrink(within - keep_last);
    shrink(within & keep_last);
    const auto vs = current.to_vector();
    return classify_obstruction(g, vs);
}

namespace {

/// Lexicographic scan of `size`-subsets for a single obstruction; connected,
/// minimum-degree-2 candidates only.
std::optional<Obstruction> scan_subsets(const Graph& g, int size) {
    const int n = g.order();
    std::vector<Vertex> pick;
    std::optional<Obstruction> found;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == size) {
            const VertexSet set = VertexSet::of(n, pick);
            for (Vertex v : pick)
                if ((g.neighbor_set(v) & set).count() < 2) return;
            if (connected_components(g, set).size() != 1) return;
            if (auto obs = classify_obstruction(g, pick)) found = std::move(obs);
            return;
        }
        for (Vertex v = from; v < n && n - v >= size - static_cast<int>(pick.size()); ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
            if (found) return;
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace

std::optional<Obstruction> find_obstruction(const Graph& g) {
    if (is_dh_by_pruning(g)) return std::nullopt;
    if (g.order() <= 16) {
        for (int size : {5, 6})
            if (auto obs = scan_subsets(g, size)) return obs;
    }
    return minimal_obstruction_within(g, g.all(), g.none());
}

// ---------------------------------------------------------------------------
// Bounded search around s

namespace {

class SmallSetSearch {
public:
    SmallSetSearch(const Graph& g, const VertexSet& s) : g_(g), s_(s), current_(s) {
        attached_ = VertexSet(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (s.contains(v)) continue;
            if (g.neighbor_set(v).intersects(s)) attached_.insert(v);
            if (g.degree(v) >= 2) pool_.push_back(v);
        }
        suffix_.assign(pool_.size() + 1, VertexSet(g.order()));
        for (std::size_t i = pool_.size(); i-- > 0;) {
            suffix_[i] = suffix_[i + 1];
            suffix_[i].insert(pool_[i]);
        }
    }

    std::optional<VertexSet> run(int size) {
        target_ = size;
        chosen_.clear();
        current_ = s_;
        if (!recurse(0)) return std::nullopt;
        return VertexSet::of(g_.order(), chosen_);
    }

private:
    bool feasible(std::size_t next) const {
        const int slots = target_ - static_cast<int>(chosen_.size());
        for (Vertex x : chosen_) {
            const int have = (g_.neighbor_set(x) & current_).count();
            if (have >= 2) continue;
            const int avail = (g_.neighbor_set(x) & suffix_[next]).count();
            if (have + std::min(avail, slots) < 2) return false;
        }
        return true;
    }

    bool accept() const {
        // Each component of g[X] must touch s, or a smaller X would exist.
        const VertexSet x = VertexSet::of(g_.order(), chosen_);
        for (const auto& comp : connected_components(g_, x))
            if (!comp.intersects(attached_)) return false;
        return !is_dh_within(g_, current_);
    }

    bool recurse(std::size_t next) {
        if (static_cast<int>(chosen_.size()) == target_) return accept();
        const std::size_t need = static_cast<std::size_t>(target_) - chosen_.size();
        for (std::size_t i = next; i + need <= pool_.size(); ++i) {
            const Vertex v = pool_[i];
            chosen_.push_back(v);
            current_.insert(v);
            if (feasible(i + 1) && recurse(i + 1)) return true;
            current_.erase(v);
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    const VertexSet& s_;
    VertexSet attached_;
    std::vector<Vertex> pool_;
    std::vector<VertexSet> suffix_;
    std::vector<Vertex> chosen_;
    VertexSet current_;
    int target_ = 0;
};

}  // namespace

std::optional<VertexSet> find_small_obstruction_set(const Graph& g, const VertexSet& s, int max_size) {
    if (s.empty()) return std::nullopt;
    SmallSetSearch search(g, s);
    for (int size = 1; size <= max_size; ++size)
        if (auto x = search.run(size)) return x;
    return std::nullopt;
}

std::optional<SmallObstructionHit> find_small_obstruction_with(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw std::domain_error("vertex set universe does not match graph order");
    if (!is_dh_within(g, s)) throw std::domain_error("g[s] is not distance-hereditary");
    if (!is_dh_within(g, g.all() - s)) throw std::domain_error("g - s is not distance-hereditary");
    auto x = find_small_obstruction_set(g, s);
    if (!x) return std::nullopt;
    auto obs = minimal_obstruction_within(g, s | *x, *x);
    if (!obs) throw std::logic_error("small obstruction search lost its witness");
    return SmallObstructionHit{std::move(*x), std::move(*obs)};
}

}  // namespace dhvd
