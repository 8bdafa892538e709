#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dhvd/generators.hpp"
#include "dhvd/oracle.hpp"
#include "dhvd/split_decomposition.hpp"
#include "fixtures.hpp"

using namespace dhvd;
using namespace dhvd::fixtures;

namespace {

int bag_of_label(const SplitDecomposition& d, Vertex v) { return d.bag_of(d.node_of(v)); }

std::vector<int> nodes_of(const SplitDecomposition& d, std::initializer_list<Vertex> labels) {
    std::vector<int> out;
    for (Vertex v : labels) out.push_back(d.node_of(v));
    return out;
}

}  // namespace

TEST_CASE("split predicate and search") {
    auto p4 = path(4);
    CHECK(is_split(p4, set(4, {0, 1})));
    CHECK_FALSE(is_split(p4, set(4, {0, 2})));
    auto sp = find_split(p4);
    REQUIRE(sp);
    CHECK(sp->x == std::vector<Vertex>{0, 1});
    CHECK(sp->y == std::vector<Vertex>{2, 3});

    CHECK_FALSE(find_split(cycle(5)));
    CHECK_FALSE(find_split(gem()));
    auto k4 = find_split(complete(4));
    REQUIRE(k4);
    CHECK(is_split(complete(4), VertexSet::of(4, k4->x)));
    CHECK_THROWS_AS(find_split(make(4, {{0, 1}, {2, 3}})), std::domain_error);
}

TEST_CASE("find_split agrees with exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        auto g = random_graph(n, 0.45, seed);
        if (!is_connected(g)) continue;
        const auto all = enumerate_splits(g);
        const auto found = find_split(g);
        CHECK(found.has_value() == !all.empty());
        if (found) {
            CHECK(is_split(g, VertexSet::of(n, found->x)));
            auto it = std::min_element(all.begin(), all.end(), [](const Split& a, const Split& b) { return a.x < b.x; });
            CHECK(found->x == it->x);
        }
    }
}

TEST_CASE("canonical decompositions of small graphs") {
    SUBCASE("star") {
        auto d = canonical_decomposition(star(4));
        CHECK(d.bag_count() == 1);
        CHECK(d.marked_edges().empty());
        CHECK(d.bag(0).shape == BagShape::Star);
        CHECK(d.label(d.bag(0).center) == 0);
    }
    SUBCASE("C5 is one prime bag") {
        auto d = canonical_decomposition(cycle(5));
        CHECK(d.bag_count() == 1);
        CHECK(d.bag(0).shape == BagShape::Prime);
    }
    SUBCASE("P4 is two stars joined by one marked edge") {
        auto d = canonical_decomposition(path(4));
        REQUIRE(d.bag_count() == 2);
        REQUIRE(d.marked_edges().size() == 1);
        for (const Bag& b : d.bags()) {
            CHECK(b.shape == BagShape::Star);
            CHECK(b.nodes.size() == 3);
            // the middle path vertex is the center; the marked node is a leaf
            CHECK_FALSE(d.is_marked(b.center));
        }
        CHECK(d.label(d.bag(bag_of_label(d, 0)).center) == 1);
        CHECK(d.label(d.bag(bag_of_label(d, 3)).center) == 2);
        CHECK(canonical(d));
        CHECK(recompose_all(d) == path(4));
        auto [p, q] = d.marked_edges().front();
        auto one = recompose(d, q);
        CHECK(one.bag_count() == 1);
        CHECK(recompose_all(one) == path(4));
    }
    SUBCASE("clique") {
        auto d = canonical_decomposition(complete(4));
        CHECK(d.bag_count() == 1);
        CHECK(d.bag(0).shape == BagShape::Complete);
        CHECK_THROWS_AS(recompose(d, 0), std::domain_error);
    }
    SUBCASE("disconnected input") {
        CHECK_THROWS_AS(canonical_decomposition(make(3, {{0, 1}})), std::domain_error);
    }
}

TEST_CASE("realized adjacency follows alternating paths") {
    auto d = canonical_decomposition(path(4));
    CHECK(realized_adjacency(d, d.node_of(0), d.node_of(1)));
    CHECK(realized_adjacency(d, d.node_of(1), d.node_of(2)));
    CHECK_FALSE(realized_adjacency(d, d.node_of(0), d.node_of(3)));
    CHECK_FALSE(realized_adjacency(d, d.node_of(0), d.node_of(2)));
    auto [p, q] = d.marked_edges().front();
    CHECK_THROWS_AS(realized_adjacency(d, p, d.node_of(0)), std::domain_error);
    CHECK_THROWS_AS(realized_adjacency(d, d.node_of(0), d.node_of(0)), std::domain_error);

    auto k4 = canonical_decomposition(complete(4));
    CHECK(realized_adjacency(k4, k4.node_of(0), k4.node_of(3)));

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_graph(9, 0.35, seed);
        if (!is_connected(g)) continue;
        auto dd = canonical_decomposition(g);
        for (Vertex u = 0; u < 9; ++u)
            for (Vertex v = u + 1; v < 9; ++v)
                CHECK(realized_adjacency(dd, dd.node_of(u), dd.node_of(v)) == g.adjacent(u, v));
    }
}

TEST_CASE("eleven-vertex fixture") {
    const Graph g = eleven();
    auto d = canonical_decomposition(g);
    CHECK(canonical(d));
    CHECK(recompose_all(d) == g);
    for (const Bag& b : d.bags()) CHECK((b.shape == BagShape::Star || b.shape == BagShape::Complete));

    const int b_twins = bag_of_label(d, 0);
    const int b_far = bag_of_label(d, 9);
    CHECK(bag_of_label(d, 1) == b_twins);
    CHECK(bag_of_label(d, 10) == b_far);

    auto path_between = path_bags(d, b_twins, b_far);
    CHECK(path_between.size() == 4);
    CHECK(path_between.front() == b_twins);
    CHECK(path_between.back() == b_far);

    const auto c1 = nodes_of(d, {0, 1});
    const auto c2 = nodes_of(d, {9, 10});
    auto sep = separator_bags(d, c1, c2);
    CHECK(sep.size() == 2);
    // the far leaf star and the bag of vertex 6 separate; the twin bag does not
    CHECK(std::find(sep.begin(), sep.end(), b_far) != sep.end());
    CHECK(std::find(sep.begin(), sep.end(), b_twins) == sep.end());
    CHECK(distance_via_separators(d, c1, c2) == 3);

    for (Vertex v = 0; v < g.order(); ++v) {
        auto parts = delete_unmarked_vertex(d, d.node_of(v));
        VertexSet seen(g.order());
        for (const auto& part : parts) {
            CHECK(canonical(part));
            const auto labels = part.labels();
            std::vector<Vertex> lv(labels.begin(), labels.end());
            auto expect = induced_subgraph(g, VertexSet::of(g.order(), lv));
            CHECK(recompose_all(part) == expect.graph);
            for (Vertex x : lv) seen.insert(x);
        }
        CHECK(seen == g.all() - set(g.order(), {v}));
    }
}

TEST_CASE("path and comp queries") {
    auto d = canonical_decomposition(path(4));
    CHECK(path_bags(d, 0, 0) == std::vector<int>{0});
    CHECK(path_bags(d, 0, 1) == std::vector<int>{0, 1});
    CHECK(comp_of(d, 0, 0).empty());
    auto comp = comp_of(d, 0, 1);
    std::vector<int> second = d.bag(1).nodes;
    std::sort(comp.begin(), comp.end());
    std::sort(second.begin(), second.end());
    CHECK(comp == second);
}

TEST_CASE("separator bags") {
    SUBCASE("two leaves of one star") {
        auto d = canonical_decomposition(star(3));
        auto sep = separator_bags(d, nodes_of(d, {1}), nodes_of(d, {2}));
        CHECK(sep == std::vector<int>{0});
        CHECK(distance_via_separators(d, nodes_of(d, {1}), nodes_of(d, {2})) == 2);
    }
    SUBCASE("inside one complete bag") {
        auto d = canonical_decomposition(complete(4));
        CHECK(separator_bags(d, nodes_of(d, {0}), nodes_of(d, {1, 2})).empty());
        CHECK(distance_via_separators(d, nodes_of(d, {0}), nodes_of(d, {1, 2})) == 1);
    }
    SUBCASE("bad arguments") {
        auto d = canonical_decomposition(path(4));
        auto [p, q] = d.marked_edges().front();
        CHECK_THROWS_AS(separator_bags(d, nodes_of(d, {0, 3}), nodes_of(d, {1})), std::domain_error);
        CHECK_THROWS_AS(separator_bags(d, {}, nodes_of(d, {1})), std::domain_error);
        CHECK_THROWS_AS(separator_bags(d, std::vector<int>{p}, nodes_of(d, {1})), std::domain_error);
        CHECK_THROWS_AS(separator_bags(d, nodes_of(d, {1}), nodes_of(d, {1})), std::domain_error);
    }
}

TEST_CASE("vertex deletion inside a decomposition") {
    SUBCASE("clique loses one vertex") {
        auto parts = delete_unmarked_vertex(canonical_decomposition(complete(4)), 0);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].bag_count() == 1);
        CHECK(parts[0].bag(0).shape == BagShape::Complete);
        CHECK(parts[0].bag(0).nodes.size() == 3);
    }
    SUBCASE("P4 loses an endpoint") {
        auto d = canonical_decomposition(path(4));
        auto parts = delete_unmarked_vertex(d, d.node_of(0));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].bag_count() == 1);
        CHECK(parts[0].bag(0).shape == BagShape::Star);
        CHECK(recompose_all(parts[0]) == path(3));
    }
    SUBCASE("marked node") {
        auto d = canonical_decomposition(path(4));
        CHECK_THROWS_AS(delete_unmarked_vertex(d, d.marked_edges().front().first), std::domain_error);
    }
}

TEST_CASE("random round trips") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 150; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        auto g = random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 7), seed);
        if (!is_connected(g)) continue;
        ++tested;
        auto d = canonical_decomposition(g);
        CHECK(canonical(d));
        CHECK(recompose_all(d) == g);
    }
}
