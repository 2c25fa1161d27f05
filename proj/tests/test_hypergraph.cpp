#include <doctest.h>

#include <sstream>

#include "hypercore/constructions.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/io.hpp"
#include "oracles.hpp"

using namespace hypercore;

namespace {
Hypergraph3 k4_minus() { return Hypergraph3::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }
}  // namespace

TEST_CASE("build K4-minus-edge") {
    auto h = k4_minus();
    CHECK(h.num_vertices() == 4);
    CHECK(h.num_edges() == 3);
    CHECK(h.degree(0) == 3);
    CHECK(h.degree(1) == 2);
}

TEST_CASE("build empty and rejects bad input") {
    auto e = Hypergraph3::build(3, {});
    CHECK(e.num_edges() == 0);
    CHECK_THROWS_AS(Hypergraph3::build(5, {{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(5, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(4, {{0, 1, 2}}, std::vector<int>{0, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("edges are normalized") {
    auto h = Hypergraph3::build(4, {{3, 1, 0}});
    CHECK(h.edge(0) == Triple{0, 1, 3});
    CHECK(h.contains(make_triple(1, 3, 0)));
}

TEST_CASE("pair degree") {
    auto h = k4_minus();
    CHECK(h.pair_degree(0, 1) == 2);
    CHECK(h.pair_degree(1, 0) == 2);
    CHECK(h.pair_degree(2, 3) == 1);
    CHECK(h.pair_degree(1, 2) == 1);
    CHECK_THROWS_AS(h.pair_degree(1, 1), std::invalid_argument);
    CHECK(h.max_pair_degree() == 2);
    CHECK_FALSE(h.is_linear());
}

TEST_CASE("modular construction pair degrees are at most one") {
    auto h = modular_construction(5);
    for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = 5; b < 10; ++b) CHECK(h.pair_degree(a, b) == 1);
    for (Vertex u = 0; u < 15; ++u)
        for (Vertex v = u + 1; v < 15; ++v) CHECK(h.pair_degree(u, v) <= 1);
    CHECK(h.is_linear());
}

TEST_CASE("pair degrees sum to 3m") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        auto h = oracle::random_small(rng, 14, 80);
        std::size_t total = 0;
        for (Vertex u = 0; u < h.num_vertices(); ++u)
            for (Vertex v = u + 1; v < h.num_vertices(); ++v) total += h.pair_degree(u, v);
        CHECK(total == 3 * h.num_edges());
    }
}

TEST_CASE("induced subgraph") {
    auto h = k4_minus();
    Vertex s3[] = {0, 1, 2};
    auto sub = induced(h, s3);
    CHECK(sub.graph.num_edges() == 1);
    Vertex all[] = {0, 1, 2, 3};
    auto id = induced(h, all);
    CHECK(id.graph == h);

    // U = V = {0,1,2} in A and B, W = {1,2,3} in C of the Z/5 system.
    auto m5 = modular_construction(5);
    Vertex s9[] = {0, 1, 2, 5, 6, 7, 11, 12, 13};
    auto z = induced(m5, s9);
    CHECK(z.graph.num_edges() == 7);
    for (const auto& t : z.graph.edges()) CHECK(m5.contains(z.lift(t)));
}

TEST_CASE("random tripartition") {
    auto h = random_uniform(12, 60, 3);
    auto a = random_tripartition(h, 11);
    auto b = random_tripartition(h, 11);
    CHECK(a == b);
    CHECK(a.is_tripartite());
    for (const auto& t : a.edges()) {
        const auto& p = *a.partition();
        CHECK(p[t[0]] != p[t[1]]);
        CHECK(p[t[0]] != p[t[2]]);
        CHECK(p[t[1]] != p[t[2]]);
    }

    auto one = Hypergraph3::build(3, {{0, 1, 2}});
    int kept = 0;
    const int trials = 100000;
    for (int s = 0; s < trials; ++s) kept += random_tripartition(one, static_cast<std::uint64_t>(s)).num_edges() > 0;
    CHECK(std::abs(kept / double(trials) - 2.0 / 9.0) < 0.01);

    auto tri = random_tripartite(5, 40, 2);
    CHECK(random_tripartition(tri, 99, true).num_edges() == 40);
}

TEST_CASE("retained edges concentrate near 2/9") {
    auto h = random_uniform(30, 900, 5);
    double total = 0;
    for (int s = 0; s < 200; ++s) total += random_tripartition(h, static_cast<std::uint64_t>(s)).num_edges();
    CHECK(std::abs(total / 200.0 / 900.0 - 2.0 / 9.0) < 0.02);
}

TEST_CASE("h3 round trip") {
    auto h = random_tripartite(6, 50, 9);
    std::stringstream ss;
    write_h3(ss, h);
    auto back = read_h3(ss);
    CHECK(back == h);
    CHECK(hypergraph_from_json(to_json(h)) == h);

    auto plain = random_uniform(10, 20, 1);
    std::stringstream s2;
    write_h3(s2, plain);
    CHECK(read_h3(s2) == plain);
}

TEST_CASE("h3 parse errors") {
    std::istringstream bad1("h3 4 2\n0 1 2\n");
    CHECK_THROWS(read_h3(bad1));
    std::istringstream bad2("h3 4 1\n2 1 0\n");
    CHECK_THROWS(read_h3(bad2));
    std::istringstream ok("# comment\nh3 4 1\n\n0 1 2\n");
    CHECK(read_h3(ok).num_edges() == 1);
}

TEST_CASE("grp round trip") {
    auto g = Group::symmetric3();
    std::stringstream ss;
    write_grp(ss, g);
    auto back = read_grp(ss);
    REQUIRE(back.order() == 6);
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b) CHECK(back.mul(a, b) == g.mul(a, b));
}

TEST_CASE("certificate invariants") {
    auto c = CoreCertificate::from_edges({{0, 2, 3}, {0, 1, 2}, {0, 1, 3}});
    CHECK(c.valid());
    CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3});
    auto bad = CoreCertificate::from_edges({{0, 1, 2}});
    CHECK_FALSE(bad.valid());
    auto w = ConfigWitness::from_edges(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(w.valid());
    CHECK_FALSE(ConfigWitness::from_edges(4, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}).valid());
}
