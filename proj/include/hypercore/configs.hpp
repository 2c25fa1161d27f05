#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "hypercore/core_search.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

struct LinearizeResult {
    Hypergraph3 graph;
    double retained_fraction = 1.0;
};

/// Greedy in edge order: keep an edge, drop every later edge sharing two
/// vertices with it. The output is linear. Each kept edge removes at most
/// 3 * (d - 1) others where d is the maximum pair degree, so at least a
/// 1 / (3d - 2) fraction survives.
LinearizeResult linearize(const Hypergraph3& h);

/// Three edges pairwise meeting in one vertex, the three meeting points
/// distinct: three degree-2 and three degree-1 vertices on six vertices.
struct SixThreeConfig {
    std::array<Triple, 3> edges;
    std::array<Vertex, 3> deg2;  // sorted
    std::array<Vertex, 3> deg1;  // sorted
    /// Roles v0..v5 under the 6-class split (v_i in class V_i), set by build_aux.
    std::optional<std::array<Vertex, 6>> roles;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Throws std::invalid_argument on a non-linear host.
std::vector<SixThreeConfig> enumerate_63(const Hypergraph3& h, std::size_t limit = kUnlimited);

struct ConfigSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<ConfigWitness> witness;
    std::uint64_t nodes_expanded = 0;
};

/// At most k vertices spanning at least l edges. A greedy pass seeded at the
/// highest pair degrees runs first; `none` is only reported after the
/// exhaustive branch and bound completes within budget.
ConfigSearchResult find_config(const Hypergraph3& h, std::size_t k, std::size_t l,
                               std::uint64_t budget = kDefaultBudget);

/// As find_config, restricted to vertex sets containing the given edge.
ConfigSearchResult find_config_through(const Hypergraph3& h, const Triple& edge, std::size_t k, std::size_t l,
                                       std::uint64_t budget = kDefaultBudget);

/// Faces of the aux clique on (v2, v3, v1, v5); face i omits one vertex.
/// Case 1: {v2,v3,v1}  case 2: {v2,v3,v5}  case 3: {v3,v1,v5}  case 4: {v2,v1,v5}.
enum class FaceCase : int { one = 1, two = 2, three = 3, four = 4 };

struct AuxCliqueHypergraph {
    /// Subclass 0..5 per host vertex: 2 * (host class) + split bit.
    std::vector<int> subclass;
    std::size_t total_configs = 0;
    std::vector<SixThreeConfig> configs;  // kept: laid out with v_i in V_i
    /// Aux edge (sorted host triple) -> indices into configs.
    std::map<Triple, std::vector<std::size_t>> faces;
    /// Each kept config's clique vertices (v2, v3, v1, v5).
    std::vector<std::array<Vertex, 4>> cliques;
    /// Set when three configs share their case-4 face: those nine edges plus
    /// one incident host edge give at most 14 vertices and 10 edges.
    std::optional<ConfigWitness> short_circuit;

    FaceCase face_case(const Triple& t) const;
    std::size_t max_multiplicity(FaceCase c) const;
};

/// Random 6-class split (one fair bit per vertex). Host must be tripartite and linear.
AuxCliqueHypergraph build_aux(const Hypergraph3& h, std::uint64_t seed);
/// Same with an explicit split bit per vertex.
AuxCliqueHypergraph build_aux(const Hypergraph3& h, const std::vector<int>& split_bits);

struct K43Count {
    std::uint64_t cliques = 0;
    std::uint64_t packing = 0;  // greedy edge-disjoint, lexicographic order
};

/// Four vertices, one in each of V2, V3, V1, V5, with all four faces present.
std::vector<std::array<Vertex, 4>> aux_cliques(const AuxCliqueHypergraph& a);
K43Count count_k43(const AuxCliqueHypergraph& a);

/// A clique whose four faces come from four distinct configs, face i from a
/// case-i config; the union of the configs, audited for <= 14 vertices and
/// >= 10 distinct edges.
std::optional<ConfigWitness> assemble_1410(const AuxCliqueHypergraph& a);

struct Core15Result {
    SearchStatus status = SearchStatus::none;
    std::optional<CoreCertificate> core;
    std::uint64_t gadgets = 0;
};

/// Pairs (6,3) configs sharing two degree-1 vertices, drops one edge to get
/// 9-vertex 5-edge gadgets with three degree-1 vertices, and joins two
/// gadgets with the same degree-1 triple. Host must be linear. The budget
/// caps the number of configs enumerated.
Core15Result find_core15(const Hypergraph3& h, std::uint64_t budget = kDefaultBudget);

}  // namespace hypercore
