#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhvd/graph.hpp"

namespace dhvd {

/// A split (X, Y): |X|, |Y| >= 2 and N(Y) is complete to N(X).
struct Split {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};

/// True iff (x, V - x) is a split of g.
bool is_split(const Graph& g, const VertexSet& x);

/// Split of a connected graph with at least 4 vertices, or nullopt when g has none.
/// Candidates are the minimal sides grown from every (frontier edge, seed) triple;
/// sides are normalized so X holds vertex 0 and the lexicographically smallest X wins.
/// Throws std::domain_error on disconnected input.
std::optional<Split> find_split(const Graph& g);

/// Same contract as find_split but returns the first split encountered
/// (twins and pendant vertices are tried first). Used by the decomposition builder.
std::optional<Split> find_any_split(const Graph& g);

enum class BagShape { Complete, Star, Prime, General };

const char* to_string(BagShape shape);

/// Node ids index the marked graph; labels are vertices of the decomposed graph.
struct Bag {
    std::vector<int> nodes;
    BagShape shape = BagShape::General;
    /// Center node for star bags, -1 otherwise.
    int center = -1;
    std::vector<int> unmarked;
    /// Marked nodes of this bag; marked[i] links to bag neighbors[i].
    std::vector<int> marked;
    std::vector<int> neighbors;
};

/// Marked graph whose bags (components of D - M(D)) form a tree.
/// Immutable; edits return new values.
class SplitDecomposition {
public:
    int node_count() const { return static_cast<int>(adj_.size()); }
    /// Unmarked edges at a node, sorted.
    std::span<const int> bag_neighbors(int node) const { return adj_[node]; }
    bool bag_adjacent(int a, int b) const;
    bool is_marked(int node) const { return partner_[node] >= 0; }
    int partner(int node) const { return partner_[node]; }
    int bag_of(int node) const { return bag_of_[node]; }
    /// Label of an unmarked node, -1 for marked nodes.
    Vertex label(int node) const { return label_[node]; }
    /// Node of a label, -1 if the label is not covered.
    int node_of(Vertex label) const;

    /// Labels covered by this decomposition, ascending.
    std::span<const Vertex> labels() const { return labels_; }

    int bag_count() const { return static_cast<int>(bags_.size()); }
    const Bag& bag(int b) const { return bags_[b]; }
    std::span<const Bag> bags() const { return bags_; }
    bool is_leaf_bag(int b) const { return bags_[b].neighbors.size() == 1; }

    /// Marked edges as (node, partner) with node < partner.
    std::vector<std::pair<int, int>> marked_edges() const;

    /// One line per bag: id, shape, center, unmarked labels, neighbor bags.
    std::string dump() const;

    /// Builds from raw marked-graph data; bags, shapes and caches are derived.
    static SplitDecomposition from_parts(std::vector<std::vector<int>> unmarked_adjacency,
                                         std::vector<int> partner, std::vector<Vertex> label);

private:
    std::vector<std::vector<int>> adj_;
    std::vector<int> partner_;
    std::vector<Vertex> label_;
    std::vector<int> bag_of_;
    std::vector<Bag> bags_;
    std::vector<Vertex> labels_;
    std::vector<int> node_of_label_;
};

/// Canonical split decomposition of a connected graph (labels are g's vertices).
/// Throws std::domain_error on disconnected or empty input.
SplitDecomposition canonical_decomposition(const Graph& g);

/// Canonical decomposition of g with node labels replaced by `labels[v]`.
SplitDecomposition canonical_decomposition(const Graph& g, std::span<const Vertex> labels);

/// Recomposes the marked edge at `marked_node`. Throws std::domain_error if unmarked.
SplitDecomposition recompose(const SplitDecomposition& d, int marked_node);

/// Recomposes every marked edge. The result is indexed by position in d.labels().
Graph recompose_all(const SplitDecomposition& d);

/// Adjacency in the decomposed graph via an alternating unmarked/marked path.
/// Throws std::domain_error for marked or equal nodes.
bool realized_adjacency(const SplitDecomposition& d, int u, int v);

/// Bags on the tree path from b1 to b2, endpoints included.
std::vector<int> path_bags(const SplitDecomposition& d, int b1, int b2);

/// Nodes of the component of D - V(b1) containing b2; empty when b1 == b2.
std::vector<int> comp_of(const SplitDecomposition& d, int b1, int b2);

/// (C1, C2)-separator bags for two disjoint sets of unmarked nodes, each inside one bag.
/// Throws std::domain_error when a set is empty, spans two bags, holds a marked node,
/// or the sets overlap.
std::vector<int> separator_bags(const SplitDecomposition& d, std::span<const int> c1,
                                std::span<const int> c2);

/// 1 + |separator_bags(d, c1, c2)|; equals the graph distance when every bag
/// is a star or complete.
int distance_via_separators(const SplitDecomposition& d, std::span<const int> c1,
                            std::span<const int> c2);

/// Canonical decompositions of (decomposed graph - label(node)), one per
/// remaining component, ordered by smallest label. Throws std::domain_error if marked.
std::vector<SplitDecomposition> delete_unmarked_vertex(const SplitDecomposition& d, int node);

}  // namespace dhvd
