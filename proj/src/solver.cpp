#include "dhvd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "dhvd/recognition.hpp"

namespace dhvd {

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::B1: return "B1";
        case RuleTag::B2: return "B2";
        case RuleTag::R1: return "R1";
        case RuleTag::R2: return "R2";
        case RuleTag::R3: return "R3";
        case RuleTag::R4: return "R4";
        case RuleTag::R5: return "R5";
    }
    return "?";
}

SolverStats& SolverStats::operator+=(const SolverStats& o) {
    nodes += o.nodes;
    branch_nodes += o.branch_nodes;
    for (int i = 0; i < kRuleCount; ++i) fired[i] += o.fired[i];
    max_children = std::max(max_children, o.max_children);
    measure_violations += o.measure_violations;
    branch_bound_violations += o.branch_bound_violations;
    structure_violations += o.structure_violations;
    compressions += o.compressions;
    return *this;
}

// ---------------------------------------------------------------------------
// Instance

struct Instance::Cache {
    std::once_flag parts_once;
    std::vector<VertexSet> components;
    TwinClassPartition twins;
    std::once_flag decomposition_once;
    std::vector<SplitDecomposition> decompositions;
};

Instance::Instance(Graph g, VertexSet s, int k)
    : g_(std::move(g)), s_(std::move(s)), k_(k), cache_(std::make_shared<Cache>()) {
    labels_.resize(g_.order());
    std::iota(labels_.begin(), labels_.end(), 0);
    next_label_ = g_.order();
    if (s_.universe() != g_.order()) throw std::domain_error("vertex set universe does not match graph order");
}

Instance::Instance(Graph g, std::vector<Vertex> labels, VertexSet s, int k, Vertex next_label)
    : g_(std::move(g)), labels_(std::move(labels)), s_(std::move(s)), k_(k), next_label_(next_label),
      cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(labels_.size()) != g_.order()) throw std::invalid_argument("label count mismatch");
    if (s_.universe() != g_.order()) throw std::domain_error("vertex set universe does not match graph order");
}

const Instance::Cache& Instance::cache() const {
    std::call_once(cache_->parts_once, [&] {
        cache_->components = connected_components(g_, g_.all() - s_);
        cache_->twins = twin_classes(g_, s_);
    });
    return *cache_;
}

const std::vector<VertexSet>& Instance::components() const { return cache().components; }

const TwinClassPartition& Instance::twins() const { return cache().twins; }

const std::vector<SplitDecomposition>& Instance::decompositions() const {
    const Cache& c = cache();
    std::call_once(cache_->decomposition_once, [&] {
        for (const auto& comp : c.components) {
            const auto sub = induced_subgraph(g_, comp);
            cache_->decompositions.push_back(canonical_decomposition(sub.graph, sub.to_parent));
        }
    });
    return cache_->decompositions;
}

int Instance::measure() const { return k_ + component_count(g_, s_); }

Instance Instance::without(const VertexSet& gone, int spend) const {
    const auto sub = induced_subgraph(g_, g_.all() - gone);
    std::vector<Vertex> labels;
    VertexSet s(sub.graph.order());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        labels.push_back(labels_[sub.to_parent[i]]);
        if (s_.contains(sub.to_parent[i])) s.insert(static_cast<Vertex>(i));
    }
    return Instance(sub.graph, std::move(labels), std::move(s), k_ - spend, next_label_);
}

Instance Instance::with_in_s(const VertexSet& more) const {
    return Instance(g_, labels_, s_ | more, k_, next_label_);
}

// ---------------------------------------------------------------------------
// Branching rules

namespace {

VertexSet single(int n, Vertex v) {
    VertexSet s(n);
    s.insert(v);
    return s;
}

/// Lexicographically smallest vertex set of a shortest connector: a connected
/// X outside S, |X| <= 5, whose S-neighbors meet two components of G[S].
std::optional<std::vector<Vertex>> find_connector(const Instance& inst) {
    const Graph& g = inst.graph();
    const VertexSet& s = inst.s();
    const auto s_comps = connected_components(g, s);
    if (s_comps.size() < 2) return std::nullopt;
    std::vector<int> comp_of(g.order(), -1);
    for (std::size_t c = 0; c < s_comps.size(); ++c)
        for (Vertex v = s_comps[c].first(); v >= 0; v = s_comps[c].next(v + 1)) comp_of[v] = static_cast<int>(c);
    // touched[v]: S-components adjacent to v, ascending.
    std::vector<std::vector<int>> touched(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        for (Vertex w : g.neighbors(v))
            if (s.contains(w)) touched[v].push_back(comp_of[w]);
        std::sort(touched[v].begin(), touched[v].end());
        touched[v].erase(std::unique(touched[v].begin(), touched[v].end()), touched[v].end());
    }
    auto meets_two = [&](const std::vector<Vertex>& xs) {
        int first = -1;
        for (Vertex x : xs)
            for (int c : touched[x]) {
                if (first < 0) first = c;
                else if (c != first) return true;
            }
        return false;
    };
    std::vector<Vertex> path;
    std::vector<char> on_path(g.order(), 0);
    for (int t = 1; t <= 5; ++t) {
        std::optional<std::vector<Vertex>> best;
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(path.size()) == t) {
                if (touched[path.back()].empty()) return;
                std::vector<Vertex> xs = path;
                std::sort(xs.begin(), xs.end());
                if (meets_two(xs) && (!best || xs < *best)) best = std::move(xs);
                return;
            }
            for (Vertex w : g.neighbors(path.back())) {
                if (s.contains(w) || on_path[w]) continue;
                path.push_back(w);
                on_path[w] = 1;
                self(self);
                on_path[w] = 0;
                path.pop_back();
            }
        };
        for (Vertex v = 0; v < g.order(); ++v) {
            if (s.contains(v) || touched[v].empty()) continue;
            path.assign(1, v);
            on_path[v] = 1;
            extend(extend);
            on_path[v] = 0;
        }
        if (best) return best;
    }
    return std::nullopt;
}

Branch make_branch(const Instance& inst, RuleTag tag, std::vector<Vertex> x, bool absorb) {
    Branch br;
    br.tag = tag;
    br.x = std::move(x);
    const int n = inst.graph().order();
    if (inst.k() >= 1) {
        for (Vertex v : br.x) {
            br.children.push_back(inst.without(single(n, v), 1));
            br.removed.push_back(v);
        }
    }
    if (absorb) {
        br.children.push_back(inst.with_in_s(VertexSet::of(n, br.x)));
        br.removed.push_back(-1);
    }
    return br;
}

}  // namespace

std::optional<Branch> try_branch_B1(const Instance& inst) {
    auto x = find_small_obstruction_set(inst.graph(), inst.s());
    if (!x) return std::nullopt;
    return make_branch(inst, RuleTag::B1, x->to_vector(), false);
}

std::optional<Branch> try_branch_B2(const Instance& inst) {
    auto x = find_connector(inst);
    if (!x) return std::nullopt;
    return make_branch(inst, RuleTag::B2, std::move(*x), true);
}

// ---------------------------------------------------------------------------
// Reduction rules

namespace {

std::vector<Vertex> unmarked_labels(const SplitDecomposition& d, const Bag& bag) {
    std::vector<Vertex> out;
    for (int v : bag.unmarked) out.push_back(d.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool has_s_neighbor(const Instance& inst, Vertex v) { return inst.graph().neighbor_set(v).intersects(inst.s()); }

bool any_s_attached(const Instance& inst, const std::vector<Vertex>& vs) {
    return std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return has_s_neighbor(inst, v); });
}

bool single_twin_class(const Instance& inst, const std::vector<Vertex>& vs) {
    if (vs.empty()) return false;
    const auto& class_of = inst.twins().class_of;
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return class_of[v] == class_of[vs.front()]; });
}

}  // namespace

std::optional<RuleAction> rule_R1_prune(const Instance& inst) {
    const auto& comps = inst.components();
    std::vector<int> attached(comps.size(), 0);
    for (const auto& tc : inst.twins().classes)
        if (tc.s_attached) ++attached[tc.component];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (attached[c] <= 1) {
            RuleAction a;
            a.tag = RuleTag::R1;
            a.component = static_cast<int>(c);
            a.vertices = comps[c].to_vector();
            return a;
        }
    }
    return std::nullopt;
}

std::optional<RuleAction> rule_R2_pendant(const Instance& inst) {
    const auto& decs = inst.decompositions();
    for (std::size_t c = 0; c < decs.size(); ++c) {
        const SplitDecomposition& d = decs[c];
        std::optional<Vertex> leaf;
        if (d.node_count() == 2) {
            // K2 component: read as a star centered at the smaller vertex.
            leaf = std::max(d.label(0), d.label(1));
        } else {
            for (const Bag& bag : d.bags()) {
                if (bag.shape != BagShape::Star || d.is_marked(bag.center)) continue;
                std::vector<Vertex> leaves;
                for (int v : bag.unmarked)
                    if (v != bag.center) leaves.push_back(d.label(v));
                if (!leaves.empty()) {
                    leaf = *std::min_element(leaves.begin(), leaves.end());
                    break;
                }
            }
        }
        if (leaf) {
            RuleAction a;
            a.tag = RuleTag::R2;
            a.component = static_cast<int>(c);
            a.vertices = {*leaf};
            a.to_s = has_s_neighbor(inst, *leaf);
            return a;
        }
    }
    return std::nullopt;
}

bool r3_applies(const Instance& inst, Vertex v) {
    const Graph& g = inst.graph();
    const auto nbrs = g.neighbors(v);
    VertexSet closed_v = g.neighbor_set(v);
    closed_v.insert(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vertex p2 = nbrs[i];
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            const Vertex p4 = nbrs[j];
            if (g.adjacent(p2, p4)) continue;
            if ((g.neighbor_set(p2) & g.neighbor_set(p4)).intersects(inst.s())) continue;
            VertexSet closed_p2 = g.neighbor_set(p2);
            closed_p2.insert(p2);
            VertexSet closed_p4 = g.neighbor_set(p4);
            closed_p4.insert(p4);
            const VertexSet ends1 = g.neighbor_set(p2) - closed_v - closed_p4;
            const VertexSet ends5 = g.neighbor_set(p4) - closed_v - closed_p2;
            if (ends5.empty()) continue;
            for (Vertex p1 = ends1.first(); p1 >= 0; p1 = ends1.next(p1 + 1))
                if (!ends5.is_subset_of(g.neighbor_set(p1))) return false;
        }
    }
    return true;
}

std::optional<RuleAction> rule_R3_irrelevant(const Instance& inst) {
    const Graph& g = inst.graph();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (inst.s().contains(v) || !r3_applies(inst, v)) continue;
        RuleAction a;
        a.tag = RuleTag::R3;
        a.vertices = {v};
        return a;
    }
    return std::nullopt;
}

std::optional<RuleAction> rule_R4_leaf_merge(const Instance& inst) {
    const auto& decs = inst.decompositions();
    for (std::size_t c = 0; c < decs.size(); ++c) {
        const SplitDecomposition& d = decs[c];
        for (int b = 0; b < d.bag_count(); ++b) {
            if (!d.is_leaf_bag(b)) continue;
            const Bag& bag = d.bag(b);
            const int link = bag.marked.front();
            const int other_b = bag.neighbors.front();
            const Bag& other = d.bag(other_b);
            const int other_link = d.partner(link);
            const bool case1 = bag.shape == BagShape::Complete && other.shape == BagShape::Star &&
                               other.center != other_link;
            const bool case2 = bag.shape == BagShape::Star && bag.center == link && other.shape == BagShape::Complete;
            if (!case1 && !case2) continue;
            auto members = unmarked_labels(d, bag);
            if (members.size() < 2 || !single_twin_class(inst, members)) continue;
            RuleAction a;
            a.tag = RuleTag::R4;
            a.component = static_cast<int>(c);
            a.bags = {b, other_b};
            a.vertices = std::move(members);
            return a;
        }
    }
    return std::nullopt;
}

std::optional<RuleAction> rule_R5_collapse(const Instance& inst) {
    const auto& decs = inst.decompositions();
    for (std::size_t c = 0; c < decs.size(); ++c) {
        const SplitDecomposition& d = decs[c];
        auto leaf_unattached = [&](int b) {
            return d.is_leaf_bag(b) && !any_s_attached(inst, unmarked_labels(d, d.bag(b)));
        };
        for (int b1 = 0; b1 < d.bag_count(); ++b1) {
            if (!leaf_unattached(b1)) continue;
            const Bag& bag1 = d.bag(b1);
            const int m1 = bag1.marked.front();
            if (bag1.shape == BagShape::Star && bag1.center != m1) continue;
            const int b2 = bag1.neighbors.front();
            const Bag& bag2 = d.bag(b2);
            if (bag2.neighbors.size() != 2 || bag2.shape != BagShape::Star || bag2.center != d.partner(m1)) continue;
            const auto c2 = unmarked_labels(d, bag2);
            if (!single_twin_class(inst, c2) || !any_s_attached(inst, c2)) continue;
            const int b3 = bag2.neighbors[0] == b1 ? bag2.neighbors[1] : bag2.neighbors[0];
            const Bag& bag3 = d.bag(b3);
            if (bag3.shape != BagShape::Star) continue;
            if (d.is_marked(bag3.center) && !leaf_unattached(d.bag_of(d.partner(bag3.center)))) continue;
            RuleAction a;
            a.tag = RuleTag::R5;
            a.component = static_cast<int>(c);
            a.bags = {b1, b2, b3};
            a.c1 = unmarked_labels(d, bag1);
            a.c2 = c2;
            a.vertices = a.c1;
            a.vertices.insert(a.vertices.end(), c2.begin(), c2.end());
            return a;
        }
    }
    return std::nullopt;
}

AppliedRule apply_rule(const Instance& inst, const RuleAction& action) {
    const Graph& g = inst.graph();
    const int n = g.order();
    switch (action.tag) {
        case RuleTag::R1:
        case RuleTag::R3:
            return {inst.without(VertexSet::of(n, action.vertices), 0), std::nullopt};
        case RuleTag::R2:
            if (action.to_s) return {inst.with_in_s(VertexSet::of(n, action.vertices)), std::nullopt};
            return {inst.without(VertexSet::of(n, action.vertices), 0), std::nullopt};
        case RuleTag::R4: {
            GraphBuilder b(n);
            for (auto [u, v] : g.edges()) b.add_edge(u, v);
            const auto& vs = action.vertices;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    if (b.has_edge(vs[i], vs[j])) b.remove_edge(vs[i], vs[j]);
                    else b.add_edge(vs[i], vs[j]);
                }
            return {Instance(b.build(), inst.labels(), inst.s(), inst.k(), inst.next_label()), std::nullopt};
        }
        case RuleTag::R5: {
            const VertexSet gone = VertexSet::of(n, action.vertices);
            const auto sub = induced_subgraph(g, g.all() - gone);
            const int kept = sub.graph.order();
            const int fresh = static_cast<int>(std::min(action.c1.size(), action.c2.size()));
            GraphBuilder b(kept + fresh);
            for (auto [u, v] : sub.graph.edges()) b.add_edge(u, v);
            // A leaf of B3: adjacent to what C1 saw outside C2, plus the S-neighbors of C2.
            const VertexSet attach =
                (g.neighbor_set(action.c1.front()) - gone) | (g.neighbor_set(action.c2.front()) & inst.s());
            for (Vertex w = attach.first(); w >= 0; w = attach.next(w + 1))
                for (int j = 0; j < fresh; ++j) b.add_edge(kept + j, sub.from_parent[w]);
            std::vector<Vertex> labels;
            VertexSet s(kept + fresh);
            for (int i = 0; i < kept; ++i) {
                labels.push_back(inst.labels()[sub.to_parent[i]]);
                if (inst.s().contains(sub.to_parent[i])) s.insert(i);
            }
            CollapseRecord rec;
            for (int j = 0; j < fresh; ++j) {
                labels.push_back(inst.next_label() + j);
                rec.created.push_back(inst.next_label() + j);
            }
            for (Vertex v : action.c1) rec.c1.push_back(inst.labels()[v]);
            for (Vertex v : action.c2) rec.c2.push_back(inst.labels()[v]);
            Instance next(b.build(), labels, std::move(s), inst.k(), inst.next_label() + fresh);
            rec.before_graph = g;
            rec.before_labels = inst.labels();
            rec.after_graph = next.graph();
            rec.after_labels = labels;
            return {std::move(next), std::move(rec)};
        }
        case RuleTag::B1:
        case RuleTag::B2:
            break;
    }
    throw std::invalid_argument("apply_rule expects a reduction rule");
}

namespace {

std::optional<RuleAction> first_reduction(const Instance& inst) {
    if (auto a = rule_R1_prune(inst)) return a;
    if (auto a = rule_R2_pendant(inst)) return a;
    if (auto a = rule_R3_irrelevant(inst)) return a;
    if (auto a = rule_R4_leaf_merge(inst)) return a;
    return rule_R5_collapse(inst);
}

}  // namespace

std::optional<Step> apply_first_rule(const Instance& inst) {
    if (auto br = try_branch_B1(inst)) return Step{std::move(*br)};
    if (auto br = try_branch_B2(inst)) return Step{std::move(*br)};
    if (auto a = first_reduction(inst)) return Step{std::move(*a)};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Search

namespace {

int local_of(const std::vector<Vertex>& labels, Vertex label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<int>(it - labels.begin());
}

/// g - (vertices labelled by q) is DH.
bool removal_is_dh(const Graph& g, const std::vector<Vertex>& labels, const std::vector<Vertex>& q) {
    VertexSet keep = g.all();
    for (Vertex label : q) {
        const int v = local_of(labels, label);
        if (v >= 0) keep.erase(v);
    }
    return is_dh_within(g, keep);
}

void translate_back(std::vector<Vertex>& q, const std::vector<CollapseRecord>& records) {
    for (auto rec = records.rbegin(); rec != records.rend(); ++rec) {
        auto in_created = [&](Vertex v) {
            return std::find(rec->created.begin(), rec->created.end(), v) != rec->created.end();
        };
        if (std::none_of(q.begin(), q.end(), in_created)) {
            if (!removal_is_dh(rec->before_graph, rec->before_labels, q))
                throw std::logic_error("collapse certificate could not be translated back");
            continue;
        }
        // Inclusion-minimal first: then q holds all of the twin set or none of it.
        for (std::size_t i = q.size(); i-- > 0;) {
            std::vector<Vertex> trial = q;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (removal_is_dh(rec->after_graph, rec->after_labels, trial)) q = std::move(trial);
        }
        const std::size_t hit = static_cast<std::size_t>(std::count_if(q.begin(), q.end(), in_created));
        std::vector<Vertex> base;
        for (Vertex v : q)
            if (!in_created(v)) base.push_back(v);
        std::vector<std::vector<Vertex>> candidates;
        for (const auto* side : {&rec->c1, &rec->c2}) {
            if (side->size() > hit) continue;
            auto cand = base;
            cand.insert(cand.end(), side->begin(), side->end());
            candidates.push_back(std::move(cand));
        }
        if (hit == 0) candidates.push_back(base);
        bool done = false;
        for (auto& cand : candidates) {
            if (removal_is_dh(rec->before_graph, rec->before_labels, cand)) {
                q = std::move(cand);
                done = true;
                break;
            }
        }
        if (!done) throw std::logic_error("collapse certificate could not be translated back");
    }
}

class Search {
public:
    explicit Search(const SolverOptions& options) : options_(options) {}

    bool run(const Instance& start, std::vector<Vertex>& q) {
        ++stats.nodes;
        Instance cur = start;
        std::vector<CollapseRecord> records;
        bool b1_clean = false;
        bool b2_clean = false;
        bool checked_small = false;
        while (true) {
            const Graph& g = cur.graph();
            if (!is_dh_within(g, cur.s())) return false;
            if (is_dh_by_pruning(g)) {
                q.clear();
                translate_back(q, records);
                return true;
            }
            if (cur.k() == 0) return false;
            if (!b1_clean) {
                if (auto br = try_branch_B1(cur)) return branch(cur, *br, records, q);
                b1_clean = true;
            }
            if (!b2_clean) {
                if (auto br = try_branch_B2(cur)) return branch(cur, *br, records, q);
                b2_clean = true;
            }
            if (options_.check_invariants && !checked_small) {
                checked_small = true;
                if (g.order() <= 16) {
                    auto obs = find_obstruction(g);
                    if (obs && obs->small()) ++stats.structure_violations;
                }
            }
            auto action = first_reduction(cur);
            if (!action) {
                if (!(g.all() - cur.s()).empty())
                    throw ExhaustionError("no rule applies but G - S is non-empty");
                throw ExhaustionError("no rule applies to a non-DH instance");
            }
            if (options_.check_invariants && action->tag != RuleTag::R1 && action->tag != RuleTag::R2)
                check_star_restriction(cur);
            ++stats.fired[static_cast<int>(action->tag)];
            auto applied = apply_rule(cur, *action);
            const bool deletion_only =
                action->tag == RuleTag::R1 || action->tag == RuleTag::R3 ||
                (action->tag == RuleTag::R2 && !action->to_s);
            if (!deletion_only) {
                b1_clean = b2_clean = false;
                checked_small = false;
            }
            if (applied.record) records.push_back(std::move(*applied.record));
            cur = std::move(applied.instance);
        }
    }

    SolverStats stats;

private:
    bool branch(const Instance& cur, const Branch& br, const std::vector<CollapseRecord>& records,
                std::vector<Vertex>& q) {
        ++stats.branch_nodes;
        ++stats.fired[static_cast<int>(br.tag)];
        stats.max_children = std::max(stats.max_children, static_cast<int>(br.children.size()));
        const int mu = cur.measure();
        for (const auto& child : br.children)
            if (child.measure() >= mu) ++stats.measure_violations;
        for (std::size_t i = 0; i < br.children.size(); ++i) {
            std::vector<Vertex> sub;
            if (!run(br.children[i], sub)) continue;
            if (br.removed[i] >= 0) sub.push_back(cur.labels()[br.removed[i]]);
            q = std::move(sub);
            translate_back(q, records);
            return true;
        }
        return false;
    }

    void check_star_restriction(const Instance& inst) {
        for (const auto& d : inst.decompositions())
            for (const Bag& bag : d.bags())
                if (bag.shape == BagShape::Star && !d.is_marked(bag.center) && bag.unmarked.size() > 1)
                    ++stats.structure_violations;
    }

    const SolverOptions& options_;
};

}  // namespace

SolveOutcome solve_disjoint(const Instance& inst, const SolverOptions& options) {
    Search search(options);
    SolveOutcome out;
    std::vector<Vertex> q;
    out.yes = search.run(inst, q);
    out.stats = search.stats;
    const int mu = inst.measure();
    if (static_cast<double>(out.stats.branch_nodes) > std::pow(6.0, mu)) ++out.stats.branch_bound_violations;
    if (out.yes) {
        std::sort(q.begin(), q.end());
        if (static_cast<int>(q.size()) > inst.k()) throw std::logic_error("certificate exceeds the budget");
        VertexSet keep = inst.graph().all();
        for (Vertex label : q) {
            const int v = local_of(inst.labels(), label);
            if (v < 0 || inst.s().contains(v)) throw std::logic_error("certificate leaves the free vertices");
            keep.erase(v);
        }
        if (!is_dh_by_bags(induced_subgraph(inst.graph(), keep).graph))
            throw std::logic_error("certificate does not leave a DH graph");
        out.deletion_set = std::move(q);
    }
    return out;
}

SolveOutcome solve(const Graph& g, int k, const SolverOptions& options) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    const int n = g.order();
    SolveOutcome out;
    std::vector<Vertex> solution;
    for (Vertex i = 0; i < n; ++i) {
        VertexSet prefix(n);
        for (Vertex v = 0; v <= i; ++v) prefix.insert(v);
        VertexSet current = VertexSet::of(n, solution);
        if (is_dh_within(g, prefix - current)) continue;
        solution.push_back(i);
        if (static_cast<int>(solution.size()) <= k) continue;

        ++out.stats.compressions;
        current.insert(i);
        if (options.check_invariants &&
            (static_cast<int>(solution.size()) > k + 1 || !is_dh_within(g, prefix - current)))
            ++out.stats.structure_violations;
        const auto gi = induced_subgraph(g, prefix);
        bool compressed = false;
        const int width = static_cast<int>(solution.size());
        for (int size = 0; size <= k && !compressed; ++size) {
            // Subsets of `solution` of this size in lexicographic order.
            std::vector<int> pick(size);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                VertexSet removed(gi.graph.order());
                for (int p : pick) removed.insert(gi.from_parent[solution[p]]);
                VertexSet s(gi.graph.order());
                for (Vertex v : solution) s.insert(gi.from_parent[v]);
                s -= removed;
                const Instance base(gi.graph, gi.to_parent, s, k - size, n);
                const Instance inst = base.without(removed, 0);
                auto res = solve_disjoint(inst, options);
                out.stats += res.stats;
                if (res.yes) {
                    std::vector<Vertex> next;
                    for (int p : pick) next.push_back(solution[p]);
                    next.insert(next.end(), res.deletion_set.begin(), res.deletion_set.end());
                    std::sort(next.begin(), next.end());
                    solution = std::move(next);
                    compressed = true;
                    break;
                }
                int j = size - 1;
                while (j >= 0 && pick[j] == width - size + j) --j;
                if (j < 0) break;
                ++pick[j];
                for (int t = j + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
        if (!compressed) return out;
    }
    std::sort(solution.begin(), solution.end());
    VertexSet keep = g.all() - VertexSet::of(n, solution);
    if (static_cast<int>(solution.size()) > k || !is_dh_by_bags(induced_subgraph(g, keep).graph))
        throw std::logic_error("iterative compression produced an invalid solution");
    out.yes = true;
    out.deletion_set = std::move(solution);
    return out;
}

std::optional<SolveOutcome> solve_minimum(const Graph& g, int max_k, const SolverOptions& options) {
    SolverStats total;
    for (int k = 0; k <= max_k; ++k) {
        auto res = solve(g, k, options);
        total += res.stats;
        if (res.yes) {
            res.stats = total;
            return res;
        }
    }
    return std::nullopt;
}

OracleResult oracle_min_dhvd(const Graph& g, const VertexSet& forbidden) {
    const int n = g.order();
    if (n > 16) throw std::domain_error("oracle_min_dhvd is limited to 16 vertices");
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (!forbidden.contains(v)) pool.push_back(v);
    const int m = static_cast<int>(pool.size());
    for (int size = 0; size <= m; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            VertexSet q(n);
            for (int p : pick) q.insert(pool[p]);
            if (is_dh_by_bags(induced_subgraph(g, g.all() - q).graph)) return OracleResult{size, q};
            int j = size - 1;
            while (j >= 0 && pick[j] == m - size + j) --j;
            if (j < 0) break;
            ++pick[j];
            for (int t = j + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return OracleResult{-1, VertexSet(n)};
}

}  // namespace dhvd
