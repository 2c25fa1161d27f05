#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

enum class SearchStatus { found, none, budget_exhausted };

std::string to_string(SearchStatus s);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// True iff every vertex covered by `edges` lies in at least two of them.
/// Throws std::invalid_argument if some triple is not an edge of h.
bool is_core(const Hypergraph3& h, std::span<const Triple> edges);

/// The maximal core: repeatedly drop vertices of degree <= 1 with their edges.
std::optional<CoreCertificate> two_core(const Hypergraph3& h);

/// Same stripping restricted to a subset of edge ids; returns surviving ids.
std::vector<EdgeId> strip_to_core(const Hypergraph3& h, std::span<const EdgeId> edges);

/// ceil(n^{3/2} / sqrt(m)).
std::size_t subsample_size(std::size_t n, std::size_t m);

/// Samples subsample_size(n, m) vertices uniformly and strips the induced
/// subgraph, up to `retries` times. Falls back to two_core(h) when the sample
/// would cover every vertex. Requires m >= 1.
std::optional<CoreCertificate> subsample_strip(const Hypergraph3& h, std::uint64_t seed, std::size_t retries);

struct MinCoreOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Class-size and edge-count bounds for linear tripartite hosts, plus
    /// memoization of visited vertex sets.
    bool prune = true;
    /// Look for a core on exactly k_max vertices instead of at most k_max.
    bool exact_size = false;
    /// Worker threads over top-level branches; 0 reads HYPERCORE_THREADS.
    unsigned threads = 1;
};

struct MinCoreResult {
    SearchStatus status = SearchStatus::none;
    std::optional<CoreCertificate> core;
    std::uint64_t nodes_expanded = 0;
};

/**
 * Exhaustive branch and bound for a smallest core on at most k_max vertices.
 *
 * The search grows a vertex set S from a root vertex, always repairing a
 * vertex of S with fewer than two edges inside S by adding one of its edges.
 * A set with no such vertex spans a core. Roots are taken in descending
 * degree order and each root only admits vertices ranked after it, so every
 * vertex set is explored under exactly one root.
 *
 * Among cores of minimum size the lexicographically smallest vertex set is
 * returned, independent of thread count. `none` is only reported when the
 * whole space was exhausted within budget.
 */
MinCoreResult min_core(const Hypergraph3& h, std::size_t k_max, const MinCoreOptions& opts = {});

/// One annotated edge of the ordered-pair graph: (i,j) -- (s,t) through the
/// middle vertex r, decoding to host edges {i,r,s} and {j,r,t}.
struct PairGraphEdge {
    std::pair<Vertex, Vertex> from;
    std::pair<Vertex, Vertex> to;
    Vertex middle;
    EdgeId first;   // {from.first, middle, to.first}
    EdgeId second;  // {from.second, middle, to.second}

    bool operator==(const PairGraphEdge&) const = default;
};

struct PairGraph {
    std::size_t host_vertices = 0;
    /// Canonical orientation (from < to); no repeated annotations.
    std::vector<PairGraphEdge> edges;
};

PairGraph build_pair_graph(const Hypergraph3& h);

struct CycleCore {
    CoreCertificate core;
    std::size_t cycle_length = 0;
    std::vector<PairGraphEdge> cycle;
};

/// Shortest pair-graph cycle whose decoded host edges form a core. Parallel
/// edges with different middle vertices count as a cycle of length 2.
std::optional<CycleCore> cycle_core(const Hypergraph3& h);

}  // namespace hypercore
