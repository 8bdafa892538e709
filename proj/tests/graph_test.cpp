#include <doctest.h>

#include <stdexcept>

#include "dhvd/graph.hpp"
#include "fixtures.hpp"

using namespace dhvd;
using namespace dhvd::fixtures;

TEST_CASE("vertex set basics") {
    VertexSet s(130);
    s.insert(3);
    s.insert(64);
    s.insert(129);
    CHECK(s.count() == 3);
    CHECK(s.first() == 3);
    CHECK(s.next(4) == 64);
    CHECK(s.next(65) == 129);
    CHECK(s.next(130) == -1);
    s.erase(64);
    CHECK(s.to_vector() == std::vector<Vertex>{3, 129});
    CHECK((VertexSet::full(130) - s).count() == 128);
    CHECK(s.is_subset_of(VertexSet::full(130)));
}

TEST_CASE("graph construction rejects bad edges") {
    std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
    std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
    std::vector<std::pair<Vertex, Vertex>> range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, range), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
    SUBCASE("consecutive cycle vertices give a path") {
        auto sub = induced_subgraph(cycle(5), set(5, {0, 1, 2}));
        CHECK(sub.graph == path(3));
        CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 2});
        CHECK(sub.from_parent[4] == -1);
    }
    SUBCASE("empty set") {
        auto sub = induced_subgraph(house(), VertexSet(5));
        CHECK(sub.graph.order() == 0);
    }
    SUBCASE("house square is a C4") {
        auto sub = induced_subgraph(house(), set(5, {0, 1, 2, 3}));
        CHECK(sub.graph == cycle(4));
    }
    SUBCASE("foreign universe") {
        CHECK_THROWS_AS(induced_subgraph(house(), VertexSet(7)), std::domain_error);
    }
}

TEST_CASE("connected components") {
    auto g = make(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_vector() == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1].to_vector() == std::vector<Vertex>{3, 4});
    CHECK(connected_components(Graph(0)).empty());
    CHECK(connected_components(cycle(7)).size() == 1);
    CHECK(component_count(g, set(5, {0, 3, 4})) == 2);
}

TEST_CASE("bfs distances stay inside the given set") {
    auto g = cycle(6);
    auto d = bfs_distances(g, set(6, {0}), g.all());
    CHECK(d == std::vector<int>{0, 1, 2, 3, 2, 1});
    auto cut = bfs_distances(g, set(6, {0}), set(6, {0, 1, 2, 3}));
    CHECK(cut[3] == 3);
    CHECK(cut[5] == -1);
}

TEST_CASE("twins") {
    CHECK(are_twins(complete(3), 0, 2));
    CHECK(are_twins(path(3), 0, 2));
    auto c5 = cycle(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK_FALSE(are_twins(c5, u, v));
    CHECK_THROWS_AS(are_twins(c5, 1, 1), std::domain_error);
}

TEST_CASE("twin classes") {
    SUBCASE("clique") {
        auto tc = twin_classes(complete(4), VertexSet(4));
        REQUIRE(tc.classes.size() == 1);
        CHECK(tc.classes[0].members.count() == 4);
        CHECK_FALSE(tc.classes[0].s_attached);
    }
    SUBCASE("star") {
        auto tc = twin_classes(star(3), VertexSet(4));
        REQUIRE(tc.classes.size() == 2);
        CHECK(tc.classes[tc.class_of[0]].members.count() == 1);
        CHECK(tc.classes[tc.class_of[1]].members.to_vector() == std::vector<Vertex>{1, 2, 3});
    }
    SUBCASE("house with the roof in S") {
        // N(0) - 1 = {3, 4} but N(1) - 0 = {2, 4}: no twins at all
        auto tc = twin_classes(house(), set(5, {4}));
        CHECK(tc.class_of[4] == -1);
        CHECK(tc.classes.size() == 4);
        for (Vertex v = 0; v < 4; ++v) {
            CHECK(tc.classes[tc.class_of[v]].members.count() == 1);
            CHECK(tc.classes[tc.class_of[v]].s_attached == (v < 2));
        }
    }
}
