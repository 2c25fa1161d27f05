#include <doctest.h>

#include "hypercore/census.hpp"
#include "hypercore/constructions.hpp"
#include "hypercore/core_search.hpp"
#include "oracles.hpp"

using namespace hypercore;

TEST_CASE("pair census small cases") {
    auto k4 = Hypergraph3::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(pair_census(k4) == 3);
    CHECK(pair_census(modular_construction(7)) == 0);
    // one pair covered by d edges
    std::vector<Triple> star;
    for (Vertex c = 2; c < 9; ++c) star.push_back({0, 1, c});
    CHECK(pair_census(Hypergraph3::build(9, star)) == 21);
    CHECK(intersecting_pairs(k4).size() == 3);
}

TEST_CASE("pair census matches oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        auto h = oracle::random_small(rng, 12, 60);
        CHECK(pair_census(h) == oracle::pair_census(h));
        CHECK(intersecting_pairs(h).size() == pair_census(h));
    }
}

TEST_CASE("find_k221") {
    auto h = Hypergraph3::build(5, {{0, 1, 2}, {0, 1, 3}, {4, 1, 2}, {4, 1, 3}});
    auto w = find_k221(h);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(w->edges.size() == 4);
    CHECK(is_core(h, w->edges));
    CHECK_FALSE(find_k221(modular_construction(5)));
}

TEST_CASE("find_6core") {
    auto h = Hypergraph3::build(6, {{0, 1, 2}, {0, 1, 3}, {4, 5, 2}, {4, 5, 3}});
    auto w = find_6core(h);
    REQUIRE(w);
    CHECK(w->vertices.size() == 6);
    CHECK(w->edges.size() == 4);
    CHECK(is_core(h, w->edges));

    auto g = Hypergraph3::build(5, {{0, 1, 2}, {0, 1, 3}, {0, 4, 2}, {0, 4, 3}});
    auto v = find_6core(g);
    REQUIRE(v);
    CHECK(v->vertices.size() == 5);
    CHECK(is_core(g, v->edges));
    CHECK_FALSE(find_6core(modular_construction(5)));
}

TEST_CASE("intersection graph: doubled edge") {
    auto h = Hypergraph3::build(6, {{0, 1, 2}, {0, 1, 3}, {4, 5, 2}, {4, 5, 3}});
    auto c = intersection_graph_c4(h);
    REQUIRE(c);
    CHECK(c->from_double_edge);
    CHECK(c->witness.vertices.size() <= 6);
    CHECK(is_core(h, c->witness.edges));
    CHECK_FALSE(intersection_graph_c4(modular_construction(5)));
}

TEST_CASE("intersection graph: 4-cycle") {
    // thirds edges (2,3),(3,6),(6,7),(7,2) over disjoint bases
    std::vector<Triple> es;
    Vertex base = 10;
    for (auto [a, b] : {std::pair<Vertex, Vertex>{2, 3}, {3, 6}, {6, 7}, {7, 2}}) {
        es.push_back(make_triple(base, base + 1, a));
        es.push_back(make_triple(base, base + 1, b));
        base += 2;
    }
    auto h = Hypergraph3::build(18, es);
    auto c = intersection_graph_c4(h);
    REQUIRE(c);
    CHECK_FALSE(c->from_double_edge);
    CHECK(c->witness.edges.size() == 8);
    CHECK(c->witness.vertices.size() == 12);
    CHECK(is_core(h, c->witness.edges));
}

TEST_CASE("finder witnesses are cores on random hosts") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto h = random_tripartite(8, 200, s);
        if (auto w = find_k221(h)) {
            CHECK(w->valid());
            CHECK(is_core(h, w->edges));
            CHECK(w->vertices.size() == 5);
        }
        if (auto w = find_6core(h)) {
            CHECK(w->valid());
            CHECK(is_core(h, w->edges));
        }
        if (auto c = intersection_graph_c4(h)) {
            CHECK(c->witness.valid());
            CHECK(is_core(h, c->witness.edges));
        }
    }
}

TEST_CASE("thresholds") {
    CHECK(six_core_threshold(10) == 45);
    CHECK(k221_threshold(10) == 240);
}
