#include "dhvd/split_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dhvd {

// ---------------------------------------------------------------------------
// Splits

bool is_split(const Graph& g, const VertexSet& x) {
    const VertexSet y = g.all() - x;
    if (x.count() < 2 || y.count() < 2) return false;
    VertexSet fx(g.order()), fy(g.order());
    for (Vertex v = x.first(); v >= 0; v = x.next(v + 1))
        if (g.neighbor_set(v).intersects(y)) fx.insert(v);
    for (Vertex v = y.first(); v >= 0; v = y.next(v + 1))
        if (g.neighbor_set(v).intersects(x)) fy.insert(v);
    for (Vertex v = fx.first(); v >= 0; v = fx.next(v + 1))
        if (!fy.is_subset_of(g.neighbor_set(v))) return false;
    return true;
}

namespace {

/// Grows the smallest side X containing {a, u} of a split that puts a on
/// X's frontier and b on Y's frontier (a ~ b). Each vertex of X must see
/// either nothing of Y or exactly N(a) ∩ Y; violators of Y are pulled into X.
class SplitGrower {
public:
    explicit SplitGrower(const Graph& g)
        : g_(g), words_((g.order() + 63) / 64), x_(words_), y_(words_), full_(words_, 0) {
        for (Vertex v = 0; v < g.order(); ++v) full_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    bool grow(Vertex a, Vertex b, Vertex u) {
        std::fill(x_.begin(), x_.end(), 0);
        y_ = full_;
        queue_.clear();
        add(a);
        add(u);
        const auto na = g_.neighbor_set(a).words();
        while (!queue_.empty()) {
            const Vertex v = queue_.back();
            queue_.pop_back();
            const auto nv = g_.neighbor_set(v).words();
            const bool frontier = g_.adjacent(v, b);
            for (std::size_t i = 0; i < words_; ++i) {
                std::uint64_t bad = (frontier ? (nv[i] ^ na[i]) : nv[i]) & y_[i];
                while (bad) {
                    const Vertex w = static_cast<Vertex>(i * 64 + std::countr_zero(bad));
                    bad &= bad - 1;
                    add(w);
                }
            }
        }
        int rest = 0;
        for (auto w : y_) rest += std::popcount(w);
        return rest >= 2;
    }

    VertexSet side() const {
        VertexSet s(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v)
            if ((x_[v >> 6] >> (v & 63)) & 1u) s.insert(v);
        return s;
    }

private:
    void add(Vertex v) {
        x_[v >> 6] |= std::uint64_t{1} << (v & 63);
        y_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        queue_.push_back(v);
    }

    const Graph& g_;
    std::size_t words_;
    std::vector<std::uint64_t> x_, y_, full_;
    std::vector<Vertex> queue_;
};

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("split search needs a connected graph");
}

Split to_split(const Graph& g, const VertexSet& x) {
    return Split{x.to_vector(), (g.all() - x).to_vector()};
}

}  // namespace

std::optional<Split> find_split(const Graph& g) {
    require_connected(g);
    if (g.order() < 4) return std::nullopt;
    SplitGrower grower(g);
    std::optional<std::vector<Vertex>> best;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex u = 0; u < g.order(); ++u) {
                if (u == a || u == b) continue;
                if (!grower.grow(a, b, u)) continue;
                VertexSet x = grower.side();
                if (!x.contains(0)) x = g.all() - x;
                auto members = x.to_vector();
                if (!best || members < *best) best = std::move(members);
            }
        }
    }
    if (!best) return std::nullopt;
    return to_split(g, VertexSet::of(g.order(), *best));
}

std::optional<Split> find_any_split(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    if (n < 4) return std::nullopt;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            VertexSet x(n);
            x.insert(v);
            x.insert(g.neighbors(v)[0]);
            return to_split(g, x);
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (are_twins(g, u, v)) {
                VertexSet x(n);
                x.insert(u);
                x.insert(v);
                return to_split(g, x);
            }
        }
    }
    SplitGrower grower(g);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b : g.neighbors(a))
            for (Vertex u = 0; u < n; ++u)
                if (u != a && u != b && grower.grow(a, b, u)) return to_split(g, grower.side());
    return std::nullopt;
}

const char* to_string(BagShape shape) {
    switch (shape) {
        case BagShape::Complete: return "complete";
        case BagShape::Star: return "star";
        case BagShape::Prime: return "prime";
        case BagShape::General: return "general";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Marked-graph builder

namespace {

struct ShapeInfo {
    BagShape shape;
    int center;
};

/// Complete (including K1, K2) or star; General otherwise.
template <typename DegreeFn>
ShapeInfo degenerate_shape(std::span<const int> nodes, DegreeFn degree) {
    const int size = static_cast<int>(nodes.size());
    bool complete = true;
    for (int v : nodes)
        if (degree(v) != size - 1) complete = false;
    if (complete) return {BagShape::Complete, -1};
    if (size < 3) return {BagShape::General, -1};
    int center = -1;
    for (int v : nodes) {
        const int d = degree(v);
        if (d == size - 1) {
            if (center >= 0) return {BagShape::General, -1};
            center = v;
        } else if (d != 1) {
            return {BagShape::General, -1};
        }
    }
    if (center < 0) return {BagShape::General, -1};
    return {BagShape::Star, center};
}

class MarkedGraph {
public:
    MarkedGraph(const Graph& g, std::span<const Vertex> labels) {
        const int n = g.order();
        adj_.resize(n);
        for (Vertex v = 0; v < n; ++v) adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        partner_.assign(n, -1);
        label_.assign(labels.begin(), labels.end());
        alive_.assign(n, true);
    }

    explicit MarkedGraph(const SplitDecomposition& d) {
        const int n = d.node_count();
        adj_.resize(n);
        partner_.resize(n);
        label_.resize(n);
        alive_.assign(n, true);
        for (int v = 0; v < n; ++v) {
            adj_[v].assign(d.bag_neighbors(v).begin(), d.bag_neighbors(v).end());
            partner_[v] = d.partner(v);
            label_[v] = d.label(v);
        }
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    Graph local_graph(std::span<const int> nodes) const {
        std::vector<int> pos(adj_.size(), -1);
        for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (int w : adj_[nodes[i]])
                if (pos[w] > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), pos[w]);
        return Graph(static_cast<int>(nodes.size()), edges);
    }

    /// Replaces a bag by its simple decomposition along (x_side, rest); returns both new bags.
    std::pair<std::vector<int>, std::vector<int>> decompose(std::span<const int> nodes,
                                                            const Split& split) {
        std::vector<int> xs, ys;
        for (Vertex i : split.x) xs.push_back(nodes[i]);
        for (Vertex i : split.y) ys.push_back(nodes[i]);
        std::vector<char> in_x(adj_.size(), 0);
        for (int v : xs) in_x[v] = 1;
        std::vector<int> fx, fy;
        for (int v : xs)
            if (std::any_of(adj_[v].begin(), adj_[v].end(), [&](int w) { return !in_x[w]; })) fx.push_back(v);
        for (int v : ys)
            if (std::any_of(adj_[v].begin(), adj_[v].end(), [&](int w) { return in_x[w]; })) fy.push_back(v);
        for (int v : xs) std::erase_if(adj_[v], [&](int w) { return !in_x[w]; });
        for (int v : ys) std::erase_if(adj_[v], [&](int w) { return in_x[w]; });
        const int mx = add_node();
        const int my = add_node();
        partner_[mx] = my;
        partner_[my] = mx;
        for (int v : fx) link(mx, v);
        for (int v : fy) link(my, v);
        xs.push_back(mx);
        ys.push_back(my);
        return {std::move(xs), std::move(ys)};
    }

    void recompose(int p) {
        const int q = partner_[p];
        const auto np = adj_[p];
        const auto nq = adj_[q];
        for (int a : np) std::erase(adj_[a], p);
        for (int b : nq) std::erase(adj_[b], q);
        for (int a : np)
            for (int b : nq) link(a, b);
        adj_[p].clear();
        adj_[q].clear();
        partner_[p] = partner_[q] = -1;
        alive_[p] = alive_[q] = false;
    }

    void recompose_all() {
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
            if (alive_[v] && partner_[v] >= 0) recompose(v);
    }

    /// Recomposes complete-complete and star leaf-to-center links until none remain.
    void merge_degenerate() {
        bool changed = true;
        while (changed) {
            changed = false;
            const auto bags = components();
            std::vector<int> bag_of(adj_.size(), -1);
            std::vector<ShapeInfo> shapes;
            for (std::size_t b = 0; b < bags.size(); ++b) {
                for (int v : bags[b]) bag_of[v] = static_cast<int>(b);
                shapes.push_back(degenerate_shape(bags[b], [&](int v) { return degree(v); }));
            }
            for (int p = 0; p < static_cast<int>(adj_.size()) && !changed; ++p) {
                if (!alive_[p] || partner_[p] < p) continue;
                const int q = partner_[p];
                const ShapeInfo sp = shapes[bag_of[p]];
                const ShapeInfo sq = shapes[bag_of[q]];
                const bool both_complete = sp.shape == BagShape::Complete && sq.shape == BagShape::Complete;
                const bool star_chain = sp.shape == BagShape::Star && sq.shape == BagShape::Star &&
                                        ((sp.center == p) != (sq.center == q));
                if (both_complete || star_chain) {
                    recompose(p);
                    changed = true;
                }
            }
        }
    }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(adj_.size(), 0);
        for (int s = 0; s < static_cast<int>(adj_.size()); ++s) {
            if (!alive_[s] || seen[s]) continue;
            std::vector<int> comp{s};
            seen[s] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (int w : adj_[comp[i]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    SplitDecomposition freeze() const {
        std::vector<int> id(adj_.size(), -1);
        int next = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (alive_[v]) id[v] = next++;
        std::vector<std::vector<int>> adj(next);
        std::vector<int> partner(next, -1);
        std::vector<Vertex> label(next, -1);
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (!alive_[v]) continue;
            for (int w : adj_[v]) adj[id[v]].push_back(id[w]);
            std::sort(adj[id[v]].begin(), adj[id[v]].end());
            partner[id[v]] = partner_[v] >= 0 ? id[partner_[v]] : -1;
            label[id[v]] = label_[v];
        }
        return SplitDecomposition::from_parts(std::move(adj), std::move(partner), std::move(label));
    }

    std::span<const Vertex> labels_by_node() const { return label_; }
    bool alive(int v) const { return alive_[v]; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int node_count() const { return static_cast<int>(adj_.size()); }

private:
    int add_node() {
        adj_.emplace_back();
        partner_.push_back(-1);
        label_.push_back(-1);
        alive_.push_back(true);
        return static_cast<int>(adj_.size()) - 1;
    }
    void link(int a, int b) {
        if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) return;
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> partner_;
    std::vector<Vertex> label_;
    std::vector<bool> alive_;
};

}  // namespace

// ---------------------------------------------------------------------------
// SplitDecomposition

SplitDecomposition SplitDecomposition::from_parts(std::vector<std::vector<int>> unmarked_adjacency,
                                                  std::vector<int> partner, std::vector<Vertex> label) {
    SplitDecomposition d;
    d.adj_ = std::move(unmarked_adjacency);
    d.partner_ = std::move(partner);
    d.label_ = std::move(label);
    const int n = static_cast<int>(d.adj_.size());
    for (auto& row : d.adj_) std::sort(row.begin(), row.end());

    d.bag_of_.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (d.bag_of_[s] >= 0) continue;
        const int b = static_cast<int>(d.bags_.size());
        Bag bag;
        bag.nodes.push_back(s);
        d.bag_of_[s] = b;
        for (std::size_t i = 0; i < bag.nodes.size(); ++i)
            for (int w : d.adj_[bag.nodes[i]])
                if (d.bag_of_[w] < 0) {
                    d.bag_of_[w] = b;
                    bag.nodes.push_back(w);
                }
        std::sort(bag.nodes.begin(), bag.nodes.end());
        d.bags_.push_back(std::move(bag));
    }
    for (auto& bag : d.bags_) {
        for (int v : bag.nodes) {
            if (d.partner_[v] >= 0) {
                bag.marked.push_back(v);
                bag.neighbors.push_back(d.bag_of_[d.partner_[v]]);
            } else {
                bag.unmarked.push_back(v);
            }
        }
        const auto info = degenerate_shape(bag.nodes, [&](int v) { return static_cast<int>(d.adj_[v].size()); });
        bag.shape = info.shape;
        bag.center = info.center;
        if (bag.shape == BagShape::General && bag.nodes.size() >= 5) {
            std::vector<int> pos(n, -1);
            for (std::size_t i = 0; i < bag.nodes.size(); ++i) pos[bag.nodes[i]] = static_cast<int>(i);
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t i = 0; i < bag.nodes.size(); ++i)
                for (int w : d.adj_[bag.nodes[i]])
                    if (pos[w] > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), pos[w]);
            if (!find_any_split(Graph(static_cast<int>(bag.nodes.size()), edges))) bag.shape = BagShape::Prime;
        }
    }
    for (int v = 0; v < n; ++v)
        if (d.label_[v] >= 0) d.labels_.push_back(d.label_[v]);
    std::sort(d.labels_.begin(), d.labels_.end());
    if (!d.labels_.empty()) {
        d.node_of_label_.assign(d.labels_.back() + 1, -1);
        for (int v = 0; v < n; ++v)
            if (d.label_[v] >= 0) d.node_of_label_[d.label_[v]] = v;
    }
    return d;
}

bool SplitDecomposition::bag_adjacent(int a, int b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int SplitDecomposition::node_of(Vertex label) const {
    if (label < 0 || label >= static_cast<Vertex>(node_of_label_.size())) return -1;
    return node_of_label_[label];
}

std::vector<std::pair<int, int>> SplitDecomposition::marked_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < node_count(); ++v)
        if (partner_[v] > v) out.emplace_back(v, partner_[v]);
    return out;
}

std::string SplitDecomposition::dump() const {
    std::ostringstream os;
    auto join = [&](const std::vector<int>& xs) {
        if (xs.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
    };
    for (int b = 0; b < bag_count(); ++b) {
        const Bag& bag = bags_[b];
        std::vector<int> unmarked;
        for (int v : bag.unmarked) unmarked.push_back(label_[v]);
        std::sort(unmarked.begin(), unmarked.end());
        std::vector<int> nbrs = bag.neighbors;
        std::sort(nbrs.begin(), nbrs.end());
        os << "bag " << b << ' ' << to_string(bag.shape);
        if (bag.shape == BagShape::Star) {
            if (is_marked(bag.center))
                os << " center=bag:" << bag_of_[partner_[bag.center]];
            else
                os << " center=" << label_[bag.center];
        }
        os << " unmarked=" << join(unmarked) << " neighbors=" << join(nbrs) << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Construction and edits

SplitDecomposition canonical_decomposition(const Graph& g, std::span<const Vertex> labels) {
    if (g.order() == 0) throw std::domain_error("cannot decompose the empty graph");
    if (!is_connected(g)) throw std::domain_error("canonical decomposition needs a connected graph");
    if (static_cast<int>(labels.size()) != g.order()) throw std::invalid_argument("label count mismatch");
    MarkedGraph m(g, labels);
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> work{all};
    while (!work.empty()) {
        auto nodes = std::move(work.back());
        work.pop_back();
        if (nodes.size() < 4) continue;
        const auto info = degenerate_shape(nodes, [&](int v) { return m.degree(v); });
        if (info.shape != BagShape::General) continue;
        const Graph local = m.local_graph(nodes);
        auto split = find_any_split(local);
        if (!split) continue;
        auto [xs, ys] = m.decompose(nodes, *split);
        work.push_back(std::move(xs));
        work.push_back(std::move(ys));
    }
    m.merge_degenerate();
    return m.freeze();
}

SplitDecomposition canonical_decomposition(const Graph& g) {
    std::vector<Vertex> labels(g.order());
    std::iota(labels.begin(), labels.end(), 0);
    return canonical_decomposition(g, labels);
}

SplitDecomposition recompose(const SplitDecomposition& d, int marked_node) {
    if (marked_node < 0 || marked_node >= d.node_count() || !d.is_marked(marked_node))
        throw std::domain_error("recompose needs a marked node");
    MarkedGraph m(d);
    m.recompose(marked_node);
    return m.freeze();
}

Graph recompose_all(const SplitDecomposition& d) {
    MarkedGraph m(d);
    m.recompose_all();
    const auto labels = d.labels();
    auto position = [&](Vertex label) {
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < m.node_count(); ++v) {
        if (!m.alive(v)) continue;
        for (int w : m.neighbors(v))
            if (v < w) edges.emplace_back(position(m.labels_by_node()[v]), position(m.labels_by_node()[w]));
    }
    return Graph(static_cast<int>(labels.size()), edges);
}

namespace {

bool alternating_reach(const SplitDecomposition& d, int from, int target) {
    for (int w : d.bag_neighbors(from)) {
        if (w == target) return true;
        if (d.is_marked(w) && alternating_reach(d, d.partner(w), target)) return true;
    }
    return false;
}

void require_unmarked(const SplitDecomposition& d, int node) {
    if (node < 0 || node >= d.node_count() || d.is_marked(node))
        throw std::domain_error("expected an unmarked node");
}

}  // namespace

bool realized_adjacency(const SplitDecomposition& d, int u, int v) {
    require_unmarked(d, u);
    require_unmarked(d, v);
    if (u == v) throw std::domain_error("realized_adjacency needs distinct nodes");
    return alternating_reach(d, u, v);
}

std::vector<int> path_bags(const SplitDecomposition& d, int b1, int b2) {
    std::vector<int> parent(d.bag_count(), -1);
    std::vector<char> seen(d.bag_count(), 0);
    std::deque<int> queue{b1};
    seen[b1] = 1;
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        if (b == b2) break;
        for (int nb : d.bag(b).neighbors)
            if (!seen[nb]) {
                seen[nb] = 1;
                parent[nb] = b;
                queue.push_back(nb);
            }
    }
    std::vector<int> path;
    for (int b = b2; b >= 0; b = parent[b]) path.push_back(b);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> comp_of(const SplitDecomposition& d, int b1, int b2) {
    if (b1 == b2) return {};
    std::vector<char> seen(d.bag_count(), 0);
    seen[b1] = seen[b2] = 1;
    std::vector<int> stack{b2};
    std::vector<int> nodes;
    while (!stack.empty()) {
        const int b = stack.back();
        stack.pop_back();
        nodes.insert(nodes.end(), d.bag(b).nodes.begin(), d.bag(b).nodes.end());
        for (int nb : d.bag(b).neighbors)
            if (!seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

namespace {

int bag_of_set(const SplitDecomposition& d, std::span<const int> c) {
    if (c.empty()) throw std::domain_error("separator query needs non-empty sets");
    for (int v : c) require_unmarked(d, v);
    const int b = d.bag_of(c.front());
    for (int v : c)
        if (d.bag_of(v) != b) throw std::domain_error("separator query set spans two bags");
    return b;
}

}  // namespace

std::vector<int> separator_bags(const SplitDecomposition& d, std::span<const int> c1, std::span<const int> c2) {
    const int b1 = bag_of_set(d, c1);
    const int b2 = bag_of_set(d, c2);
    for (int v : c1)
        if (std::find(c2.begin(), c2.end(), v) != c2.end()) throw std::domain_error("separator sets overlap");
    const auto path = path_bags(d, b1, b2);
    std::vector<int> out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Bag& bag = d.bag(path[i]);
        if (bag.shape != BagShape::Star) continue;
        const int center = bag.center;
        // The center "points toward" side j when it links to the next bag on the
        // path toward B_j, or when B_j is this bag and the center belongs to C_j.
        auto toward = [&](std::size_t step_index, bool at_end, std::span<const int> c) {
            if (at_end) return std::find(c.begin(), c.end(), center) != c.end();
            return d.is_marked(center) && d.bag_of(d.partner(center)) == path[step_index];
        };
        const bool toward1 = toward(i == 0 ? 0 : i - 1, i == 0, c1);
        const bool toward2 = toward(i + 1 < path.size() ? i + 1 : i, i + 1 == path.size(), c2);
        if (!toward1 && !toward2) out.push_back(path[i]);
    }
    return out;
}

int distance_via_separators(const SplitDecomposition& d, std::span<const int> c1, std::span<const int> c2) {
    return 1 + static_cast<int>(separator_bags(d, c1, c2).size());
}

std::vector<SplitDecomposition> delete_unmarked_vertex(const SplitDecomposition& d, int node) {
    require_unmarked(d, node);
    const Graph whole = recompose_all(d);
    const auto labels = d.labels();
    const Vertex removed =
        static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), d.label(node)) - labels.begin());
    VertexSet rest = whole.all();
    rest.erase(removed);
    std::vector<SplitDecomposition> out;
    for (const auto& comp : connected_components(whole, rest)) {
        const auto sub = induced_subgraph(whole, comp);
        std::vector<Vertex> sub_labels;
        for (Vertex v : sub.to_parent) sub_labels.push_back(labels[v]);
        out.push_back(canonical_decomposition(sub.graph, sub_labels));
    }
    return out;
}

}  // namespace dhvd
