// Randomized agreement with the brute-force oracles, plus certificate invariants.
#include <doctest.h>

#include "hypercore/census.hpp"
#include "hypercore/configs.hpp"
#include "hypercore/constructions.hpp"
#include "hypercore/core_search.hpp"
#include "oracles.hpp"

using namespace hypercore;

namespace {

void check_certificate(const Hypergraph3& h, const CoreCertificate& c) {
    CHECK(c.valid());
    CHECK(is_core(h, c.edges));
    CHECK(oracle::is_core(c.edges));
    CHECK(3 * c.edges.size() >= 2 * c.vertices.size());
}

}  // namespace

TEST_CASE("min_core matches the oracle") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 150; ++i) {
        auto h = oracle::random_small(rng, 12, 60);
        std::size_t k = 4 + rng() % (h.num_vertices() - 3);
        auto got = min_core(h, k);
        auto want = oracle::min_core(h, k);
        REQUIRE(got.status != SearchStatus::budget_exhausted);
        CHECK((got.status == SearchStatus::found) == want.has_value());
        if (got.core && want) {
            CHECK(got.core->vertices == want->vertices);
            check_certificate(h, *got.core);
        }
        MinCoreOptions plain;
        plain.prune = false;
        auto unpruned = min_core(h, k, plain);
        CHECK(unpruned.status == got.status);
        CHECK(unpruned.core == got.core);
    }
}

TEST_CASE("min_core matches the oracle on tripartite hosts") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 80; ++i) {
        std::size_t q = 3 + rng() % 2;
        auto h = random_tripartite(q, rng() % (q * q * q / 2 + 1), rng());
        std::size_t k = 4 + rng() % 6;
        auto got = min_core(h, k);
        auto want = oracle::min_core(h, k);
        CHECK((got.status == SearchStatus::found) == want.has_value());
        if (got.core && want) CHECK(got.core->vertices == want->vertices);
        auto lin = random_linear_tripartite(4, 1 + rng() % 12, rng());
        auto a = min_core(lin, 9);
        auto b = oracle::min_core(lin, 9);
        CHECK((a.status == SearchStatus::found) == b.has_value());
    }
}

TEST_CASE("exact-size min_core matches the oracle") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 100; ++i) {
        auto h = oracle::random_small(rng, 11, 40);
        std::size_t k = 4 + rng() % (h.num_vertices() - 3);
        MinCoreOptions o;
        o.exact_size = true;
        auto got = min_core(h, k, o);
        auto want = oracle::min_core(h, k, true);
        CHECK((got.status == SearchStatus::found) == want.has_value());
        if (got.core) {
            CHECK(got.core->vertices.size() == k);
            check_certificate(h, *got.core);
        }
    }
}

TEST_CASE("find_config matches the oracle") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 150; ++i) {
        auto h = oracle::random_small(rng, 12, 40);
        std::size_t k = 4 + rng() % (h.num_vertices() - 3);
        std::size_t l = 2 + rng() % 8;
        auto got = find_config(h, k, l);
        REQUIRE(got.status != SearchStatus::budget_exhausted);
        CHECK((got.status == SearchStatus::found) == oracle::has_config(h, k, l));
        if (got.witness) {
            CHECK(got.witness->valid());
            CHECK(got.witness->k == k);
            for (const auto& e : got.witness->edges) CHECK(h.contains(e));
        }
    }
}

TEST_CASE("enumerate_63 matches the oracle") {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 100; ++i) {
        auto h = linearize(oracle::random_small(rng, 14, 60)).graph;
        auto cs = enumerate_63(h);
        auto want = oracle::configs63(h);
        std::set<std::array<Triple, 3>> got;
        for (const auto& c : cs) {
            got.insert(c.edges);
            std::set<Vertex> vs;
            for (const auto& e : c.edges) vs.insert(e.begin(), e.end());
            CHECK(vs.size() == 6);
        }
        CHECK(got.size() == cs.size());
        CHECK(got == want);
    }
}

TEST_CASE("pair graph size matches the definition") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 40; ++i) {
        auto h = linearize(oracle::random_small(rng, 14, 50)).graph;
        CHECK(build_pair_graph(h).edges.size() == oracle::pair_graph_edges(h));
    }
}

TEST_CASE("every certificate satisfies the core invariants") {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 60; ++i) {
        auto h = oracle::random_small(rng, 16, 50);
        if (auto c = two_core(h)) check_certificate(h, *c);
        if (h.num_edges() > 0)
            if (auto c = subsample_strip(h, rng(), 5)) check_certificate(h, *c);
        if (auto c = cycle_core(h)) {
            check_certificate(h, c->core);
            CHECK(c->core.vertices.size() <= 3 * c->cycle_length);
        }
        if (auto w = find_6core(h)) CHECK(oracle::is_core(w->edges));
        if (auto w = find_k221(h)) CHECK(oracle::is_core(w->edges));
    }
}

TEST_CASE("is_core matches the oracle on random subsets") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 200; ++i) {
        auto h = oracle::random_small(rng, 9, 30);
        std::vector<Triple> pick;
        for (const auto& t : h.edges())
            if (rng() % 2) pick.push_back(t);
        CHECK(is_core(h, pick) == oracle::is_core(pick));
    }
}

TEST_CASE("two_core equals the maximal core") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 100; ++i) {
        auto h = oracle::random_small(rng, 14, 30);
        auto c = two_core(h);
        auto want = oracle::strip(h.edges());
        CHECK((c ? c->edges : std::vector<Triple>{}) == want);
    }
}
