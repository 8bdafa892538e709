#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dhvd/generators.hpp"
#include "dhvd/oracle.hpp"
#include "dhvd/recognition.hpp"
#include "dhvd/solver.hpp"
#include "fixtures.hpp"

using namespace dhvd;
using namespace dhvd::fixtures;

namespace {

bool has_x(const std::vector<Split>& splits, std::vector<Vertex> x) {
    return std::any_of(splits.begin(), splits.end(), [&](const Split& s) { return s.x == x; });
}

}  // namespace

TEST_CASE("split enumeration") {
    CHECK(enumerate_splits(cycle(5)).empty());
    auto k4 = enumerate_splits(complete(4));
    CHECK(k4.size() == 3);
    for (const auto& s : k4) CHECK(is_split(complete(4), VertexSet::of(4, s.x)));
    CHECK(has_x(k4, {0, 1}));
    auto p4 = enumerate_splits(path(4));
    CHECK(has_x(p4, {0, 1}));
    CHECK_THROWS_AS(enumerate_splits(path(15)), std::domain_error);
    CHECK_THROWS_AS(enumerate_splits(make(4, {{0, 1}})), std::domain_error);
}

TEST_CASE("literal distance-hereditary check") {
    CHECK_FALSE(exhaustive_is_dh(domino()));
    CHECK(exhaustive_is_dh(path(10)));
    CHECK_FALSE(exhaustive_is_dh(cycle(6)));
    CHECK(exhaustive_is_dh(star(6)));
    CHECK(exhaustive_is_dh(complete(5)));
    CHECK_THROWS_AS(exhaustive_is_dh(path(11)), std::domain_error);
}

TEST_CASE("branching oracle") {
    auto c5 = branching_min_dhvd(cycle(5), VertexSet(5), 3);
    REQUIRE(c5);
    CHECK(c5->size() == 1);
    auto fixed = branching_min_dhvd(cycle(5), set(5, {0, 1, 2, 3}), 3);
    REQUIRE(fixed);
    CHECK(*fixed == std::vector<Vertex>{4});
    CHECK_FALSE(branching_min_dhvd(cycle(5), cycle(5).all(), 3));
    CHECK_FALSE(branching_min_dhvd(gen_vc_gadget(complete(3)), VertexSet(15), 1));
    auto gadget = branching_min_dhvd(gen_vc_gadget(complete(3)), VertexSet(15), 3);
    REQUIRE(gadget);
    CHECK(gadget->size() == 2);

    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto g = random_graph(9, 0.35, seed);
        auto best = branching_min_dhvd(g, g.none(), 9);
        REQUIRE(best);
        CHECK(static_cast<int>(best->size()) == oracle_min_dhvd(g, g.none()).size);
    }
}

TEST_CASE("brute-force vertex cover") {
    CHECK(brute_force_vertex_cover(complete(3)).size() == 2);
    CHECK(brute_force_vertex_cover(star(5)) == std::vector<Vertex>{0});
    CHECK(brute_force_vertex_cover(Graph(4)).empty());
    CHECK(brute_force_vertex_cover(cycle(7)).size() == 4);
    CHECK_THROWS_AS(brute_force_vertex_cover(path(21)), std::domain_error);
}

TEST_CASE("gadget deletion number equals vertex cover") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto base = random_graph(5, 0.5, seed);
        auto gadget = gen_vc_gadget(base);
        auto best = branching_min_dhvd(gadget, gadget.none(), 6);
        REQUIRE(best);
        CHECK(best->size() == brute_force_vertex_cover(base).size());
    }
}
