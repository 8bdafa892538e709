#include <doctest.h>

#include <stdexcept>

#include "dhvd/generators.hpp"
#include "dhvd/oracle.hpp"
#include "dhvd/recognition.hpp"
#include "fixtures.hpp"

using namespace dhvd;
using namespace dhvd::fixtures;

TEST_CASE("distance recognizer") {
    CHECK_FALSE(is_dh_by_distances(cycle(5)));
    CHECK(is_dh_by_distances(path(6)));
    CHECK(is_dh_by_distances(star(5)));
    CHECK(is_dh_by_distances(complete(5)));
    CHECK_FALSE(is_dh_by_distances(house()));
    CHECK_FALSE(is_dh_by_distances(gem()));
    CHECK_FALSE(is_dh_by_distances(domino()));
    CHECK(is_dh_by_distances(Graph(0)));
    CHECK_THROWS_AS(is_dh_by_distances(path(11)), std::domain_error);
}

TEST_CASE("bag recognizer") {
    CHECK_FALSE(is_dh_by_bags(cycle(5)));
    CHECK(is_dh_by_bags(eleven()));
    CHECK_FALSE(is_dh_by_bags(gem()));
    CHECK(is_dh_by_bags(path(30)));
    CHECK_FALSE(is_dh_by_bags(cycle(40)));
    // disconnected: one bad component is enough
    CHECK_FALSE(is_dh_by_bags(make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}})));
}

TEST_CASE("pruning recognizer") {
    CHECK(is_dh_by_pruning(eleven()));
    CHECK_FALSE(is_dh_by_pruning(domino()));
    CHECK(is_dh_within(house(), set(5, {0, 1, 2, 4})));
    CHECK_FALSE(is_dh_within(house(), house().all()));
}

TEST_CASE("obstruction finder") {
    SUBCASE("house") {
        auto obs = find_obstruction(house());
        REQUIRE(obs);
        CHECK(obs->kind == ObstructionKind::House);
        CHECK(obs->small());
        CHECK(verify_obstruction(house(), *obs));
    }
    SUBCASE("gem and domino") {
        auto g = find_obstruction(gem());
        REQUIRE(g);
        CHECK(g->kind == ObstructionKind::Gem);
        auto d = find_obstruction(domino());
        REQUIRE(d);
        CHECK(d->kind == ObstructionKind::Domino);
        CHECK(d->vertices.size() == 6);
    }
    SUBCASE("long hole") {
        auto obs = find_obstruction(cycle(9));
        REQUIRE(obs);
        CHECK(obs->kind == ObstructionKind::Hole);
        CHECK(obs->vertices.size() == 9);
        CHECK_FALSE(obs->small());
        CHECK(verify_obstruction(cycle(9), *obs));
    }
    SUBCASE("hole in a large sparse graph") {
        GraphBuilder b(40);
        for (int i = 0; i + 1 < 40; ++i) b.add_edge(i, i + 1);
        b.add_edge(10, 17);
        auto g = b.build();
        auto obs = find_obstruction(g);
        REQUIRE(obs);
        CHECK(obs->kind == ObstructionKind::Hole);
        CHECK(obs->vertices.size() == 8);
        CHECK(verify_obstruction(g, *obs));
    }
    SUBCASE("DH graphs have none") {
        CHECK_FALSE(find_obstruction(eleven()));
        CHECK_FALSE(find_obstruction(complete(6)));
        CHECK_FALSE(find_obstruction(path(25)));
    }
}

TEST_CASE("classification") {
    std::vector<Vertex> all5{0, 1, 2, 3, 4};
    CHECK(classify_obstruction(house(), all5)->kind == ObstructionKind::House);
    CHECK(classify_obstruction(cycle(5), all5)->kind == ObstructionKind::Hole);
    CHECK_FALSE(classify_obstruction(path(5), all5));
    Obstruction wrong{ObstructionKind::Gem, all5};
    CHECK_FALSE(verify_obstruction(house(), wrong));
    // hole vertices must be in cyclic order
    Obstruction scrambled{ObstructionKind::Hole, {0, 2, 1, 3, 4}};
    CHECK_FALSE(verify_obstruction(cycle(5), scrambled));
}

TEST_CASE("small obstruction with a fixed part") {
    SUBCASE("house needs all four square vertices") {
        auto hit = find_small_obstruction_with(house(), set(5, {4}));
        REQUIRE(hit);
        CHECK(hit->x.to_vector() == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(hit->obstruction.kind == ObstructionKind::House);
    }
    SUBCASE("C7 has no small obstruction") {
        CHECK_FALSE(find_small_obstruction_with(cycle(7), set(7, {0})));
    }
    SUBCASE("DH graph") {
        CHECK_FALSE(find_small_obstruction_with(eleven(), set(11, {0, 6})));
    }
    SUBCASE("C6 through S") {
        auto hit = find_small_obstruction_with(cycle(6), set(6, {0}));
        REQUIRE(hit);
        CHECK(hit->x.count() == 5);
        CHECK(hit->obstruction.kind == ObstructionKind::Hole);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(find_small_obstruction_with(house(), VertexSet(5)), std::domain_error);
        CHECK_THROWS_AS(find_small_obstruction_with(house(), house().all()), std::domain_error);
    }
}

TEST_CASE("recognizers agree with the literal definition") {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        auto g = random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
        const bool truth = exhaustive_is_dh(g);
        CHECK(is_dh_by_distances(g) == truth);
        CHECK(is_dh_by_bags(g) == truth);
        CHECK(is_dh_by_pruning(g) == truth);
        auto obs = find_obstruction(g);
        CHECK(obs.has_value() == !truth);
        if (obs) CHECK(verify_obstruction(g, *obs));
    }
}
