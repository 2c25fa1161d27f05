#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

/// Two edges {x,y,a} and {x,y,b} meeting in the base pair {x,y}.
struct IntersectingPair {
    Vertex x, y;  // base, x < y
    Vertex a, b;  // thirds, a < b
};

/// Every intersecting pair, grouped by base pair in ascending order.
std::vector<IntersectingPair> intersecting_pairs(const Hypergraph3& h);

/// Sum over unordered pairs of C(pair_degree, 2).
std::uint64_t pair_census(const Hypergraph3& h);

/// The pair-census levels above which the finders below cannot miss:
/// C(n,2) third-pair keys for find_6core, 2*C(n,3) for find_k221 (the
/// factor 2 covers the two keys each intersecting pair is filed under).
std::uint64_t six_core_threshold(std::size_t n);
std::uint64_t k221_threshold(std::size_t n);

/// A K(2,2,1): edges {x,y,a},{x,y,b},{x',y,a},{x',y,b} on five vertices.
std::optional<ConfigWitness> find_k221(const Hypergraph3& h);

/// Two intersecting pairs with the same thirds and different bases; at most
/// six vertices, four edges.
std::optional<ConfigWitness> find_6core(const Hypergraph3& h);

struct IntersectionC4 {
    ConfigWitness witness;
    bool from_double_edge = false;  // two pairs shared their thirds
};

/// Builds the graph joining the thirds of every intersecting pair. A doubled
/// edge yields a <=6-vertex core; otherwise the first 4-cycle whose four
/// defining edge pairs form a core is returned (8 edges, <=12 vertices).
std::optional<IntersectionC4> intersection_graph_c4(const Hypergraph3& h);

}  // namespace hypercore
