#include <doctest.h>

#include <set>

#include "hypercore/constructions.hpp"
#include "hypercore/core_search.hpp"
#include "hypercore/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypercore;

namespace {
Hypergraph3 k4_minus() { return Hypergraph3::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }
}  // namespace

TEST_CASE("is_core basics") {
    auto h = k4_minus();
    CHECK(is_core(h, h.edges()));
    std::vector<Triple> one{h.edge(0)};
    CHECK_FALSE(is_core(h, one));
    std::vector<Triple> none;
    CHECK_FALSE(is_core(h, none));
    std::vector<Triple> foreign{{1, 2, 3}};
    CHECK_THROWS_AS(is_core(h, foreign), std::invalid_argument);
}

TEST_CASE("a 9-vertex core inside the Z/5 block") {
    // U = V = {0,1,2}, W = {1,2,3}: 7 induced edges. Without {u=0, v=1, w=1}
    // vertex u=0 is left with one edge; the whole block is the core.
    auto m5 = modular_construction(5);
    Vertex s9[] = {0, 1, 2, 5, 6, 7, 11, 12, 13};
    auto sub = induced(m5, s9);
    std::vector<Triple> es;
    for (const auto& t : sub.graph.edges()) es.push_back(sub.lift(t));
    REQUIRE(es.size() == 7);
    std::vector<Triple> rest;
    for (const auto& t : es)
        if (t != make_triple(0, 6, 11)) rest.push_back(t);
    REQUIRE(rest.size() == 6);
    CHECK(is_core(m5, rest) == oracle::is_core(rest));
    CHECK(is_core(m5, es));
    std::size_t best = 0;
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
        std::vector<Triple> pick;
        for (unsigned i = 0; i < 7; ++i)
            if (mask >> i & 1) pick.push_back(es[i]);
        if (oracle::is_core(pick)) best = std::max(best, pick.size());
        CHECK(is_core(m5, pick) == oracle::is_core(pick));
    }
    CHECK(best >= 6);
}

TEST_CASE("two_core") {
    auto h = k4_minus();
    auto c = two_core(h);
    REQUIRE(c);
    CHECK(c->edges == h.edges());
    auto path = Hypergraph3::build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    CHECK_FALSE(two_core(path));
    CHECK_FALSE(two_core(Hypergraph3::build(3, {})));
}

TEST_CASE("two_core is order independent") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto h = random_uniform(14, 14 + i % 10, rng());
        auto c = two_core(h);
        std::vector<Triple> mine = c ? c->edges : std::vector<Triple>{};
        std::vector<EdgeId> ids(h.num_edges());
        std::iota(ids.begin(), ids.end(), EdgeId{0});
        std::shuffle(ids.begin(), ids.end(), rng);
        auto kept = strip_to_core(h, ids);
        std::vector<Triple> other;
        for (EdgeId e : kept) other.push_back(h.edge(e));
        std::sort(other.begin(), other.end());
        CHECK(mine == other);
        CHECK(mine == oracle::strip(h.edges()));
    }
}

TEST_CASE("m >= n-1 edges always leave a core") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        std::size_t n = 10 + s % 40;
        CHECK(two_core(random_uniform(n, n - 1, s)));
    }
}

TEST_CASE("a loose sunflower has n-2 edges and no core") {
    std::vector<Triple> es;
    for (Vertex i = 2; i < 12; ++i) es.push_back({0, 1, i});
    auto h = Hypergraph3::build(12, es);
    CHECK(h.num_edges() == h.num_vertices() - 2);
    CHECK_FALSE(two_core(h));
}

TEST_CASE("subsample") {
    CHECK(subsample_size(200, 10000) == 29);
    CHECK(subsample_size(100, 100) == 100);
    CHECK(subsample_size(4, 1) == 8);
    auto h = random_uniform(200, 10000, 4);
    auto a = subsample_strip(h, 17, 50);
    auto b = subsample_strip(h, 17, 50);
    CHECK(a == b);
    if (a) {
        CHECK(a->valid());
        CHECK(a->vertices.size() <= 29);
        CHECK(is_core(h, a->edges));
    }
    auto tree = Hypergraph3::build(7, {{0, 1, 2}, {2, 3, 4}, {2, 5, 6}});
    CHECK_FALSE(subsample_strip(tree, 1, 10));
}

TEST_CASE("min_core examples") {
    auto r = min_core(k4_minus(), 4);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.core->vertices.size() == 4);
    CHECK(r.core->edges.size() == 3);
    CHECK_THROWS_AS(min_core(k4_minus(), 3), std::invalid_argument);

    auto m5 = modular_construction(5);
    CHECK(min_core(m5, 8).status == SearchStatus::none);
    auto nine = min_core(m5, 9);
    REQUIRE(nine.status == SearchStatus::found);
    CHECK(nine.core->vertices.size() == 9);
    CHECK(is_core(m5, nine.core->edges));
    CHECK_FALSE(oracle::min_core(m5, 8));
    auto o9 = oracle::min_core(m5, 9);
    REQUIRE(o9);
    CHECK(o9->vertices == nine.core->vertices);
}

TEST_CASE("min_core budget") {
    auto m7 = modular_construction(7);
    MinCoreOptions o;
    o.budget = 3;
    auto r = min_core(m7, 8, o);
    CHECK(r.status == SearchStatus::budget_exhausted);
    CHECK_FALSE(r.core);
    CHECK(to_string(r.status) == "budget-exhausted");
}

TEST_CASE("tripartite hosts have no 4-vertex core") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto h = random_tripartite(4, 40, s);
        auto r = min_core(h, 4);
        CHECK(r.status == SearchStatus::none);
    }
}

TEST_CASE("min_core is thread independent") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto h = random_tripartite(6, 60, s);
        MinCoreOptions one, four;
        four.threads = 4;
        auto a = min_core(h, 7, one);
        auto b = min_core(h, 7, four);
        CHECK(a.status == b.status);
        CHECK(a.core == b.core);
    }
}

TEST_CASE("pair graph of two edges") {
    auto h = Hypergraph3::build(5, {{0, 1, 2}, {0, 3, 4}});
    auto g = build_pair_graph(h);
    std::set<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> got;
    for (const auto& e : g.edges) {
        CHECK(e.middle == 0);
        CHECK(e.first != e.second);
        got.insert({e.from, e.to});
    }
    using P = std::pair<Vertex, Vertex>;
    auto canon = [](P a, P b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    std::set<std::pair<P, P>> want{canon({1, 3}, {2, 4}), canon({1, 4}, {2, 3}), canon({3, 1}, {4, 2}),
                                   canon({4, 1}, {3, 2})};
    CHECK(got == want);
    CHECK(g.edges.size() == 4);

    auto disjoint = Hypergraph3::build(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(build_pair_graph(disjoint).edges.empty());
}

TEST_CASE("pair graph edges decode") {
    auto h = modular_construction(5);
    auto g = build_pair_graph(h);
    CHECK(g.edges.size() == oracle::pair_graph_edges(h));
    for (const auto& e : g.edges) {
        CHECK(h.edge(e.first) == make_triple(e.from.first, e.middle, e.to.first));
        CHECK(h.edge(e.second) == make_triple(e.from.second, e.middle, e.to.second));
    }
}

TEST_CASE("cycle_core") {
    auto h = Hypergraph3::build(6, {{0, 1, 2}, {0, 1, 3}, {4, 5, 2}, {4, 5, 3}});
    auto c = cycle_core(h);
    REQUIRE(c);
    CHECK(is_core(h, c->core.edges));
    CHECK(c->core.vertices.size() <= 3 * c->cycle_length);

    auto path = Hypergraph3::build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    CHECK_FALSE(cycle_core(path));

    for (std::uint64_t s = 0; s < 10; ++s) {
        auto r = random_tripartite(10, 150, s);
        if (auto cc = cycle_core(r)) {
            CHECK(is_core(r, cc->core.edges));
            CHECK(cc->core.vertices.size() <= 3 * cc->cycle_length);
            CHECK(cc->core.valid());
        }
    }
}
