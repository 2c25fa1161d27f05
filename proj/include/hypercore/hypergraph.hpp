#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypercore {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// An unordered vertex triple, stored sorted ascending.
using Triple = std::array<Vertex, 3>;

/// Sorts three vertices into a Triple. Does not check distinctness.
Triple make_triple(Vertex a, Vertex b, Vertex c);

inline std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline std::pair<Vertex, Vertex> unpack_pair(std::uint64_t key) {
    return {static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu)};
}

/// Number of vertices shared by two triples.
int shared_vertices(const Triple& a, const Triple& b);

inline bool triple_contains(const Triple& t, Vertex v) {
    return t[0] == v || t[1] == v || t[2] == v;
}

/**
 * A simple 3-uniform hypergraph on vertices 0..n-1.
 *
 * Immutable after build(). Edges keep their insertion order (each triple is
 * sorted internally), so greedy procedures that depend on "input order" see
 * the order the caller supplied. The pair-degree index is built lazily on the
 * first pair query and shared between copies.
 */
class Hypergraph3 {
public:
    Hypergraph3() = default;

    /// Throws std::invalid_argument on out-of-range or repeated vertices,
    /// duplicate edges, or a 3-class partition that some edge does not cross.
    static Hypergraph3 build(std::size_t n, std::vector<Triple> edges,
                             std::optional<std::vector<int>> partition = std::nullopt);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }
    const Triple& edge(EdgeId e) const { return edges_[e]; }

    std::span<const EdgeId> incident(Vertex v) const {
        return {inc_.data() + inc_offsets_[v], inc_.data() + inc_offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return inc_offsets_[v + 1] - inc_offsets_[v]; }

    std::optional<EdgeId> find_edge(const Triple& t) const;
    bool contains(const Triple& t) const { return find_edge(t).has_value(); }

    /// Number of edges containing both u and v. Throws if u == v.
    std::size_t pair_degree(Vertex u, Vertex v) const;
    /// Edges containing both u and v, ascending by id.
    std::span<const EdgeId> pair_edges(Vertex u, Vertex v) const;

    /// Calls f(u, v, edges) for every pair covered by at least one edge,
    /// in ascending (u, v) order.
    template <typename F>
    void for_each_covered_pair(F&& f) const {
        const PairIndex& idx = pair_index();
        for (std::size_t i = 0; i < idx.keys.size(); ++i) {
            auto [u, v] = unpack_pair(idx.keys[i]);
            std::span<const EdgeId> es{idx.edges.data() + idx.offsets[i],
                                       idx.edges.data() + idx.offsets[i + 1]};
            f(u, v, es);
        }
    }

    const std::optional<std::vector<int>>& partition() const { return partition_; }
    /// Number of distinct class labels, 0 without a partition.
    int num_classes() const;
    bool is_tripartite() const { return num_classes() == 3; }
    /// True when every pair degree is at most 1.
    bool is_linear() const;
    std::size_t max_pair_degree() const;

    bool operator==(const Hypergraph3& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && partition_ == other.partition_;
    }

private:
    struct PairIndex {
        std::vector<std::uint64_t> keys;
        std::vector<std::uint32_t> offsets;
        std::vector<EdgeId> edges;
        std::unordered_map<std::uint64_t, std::uint32_t> slot;
        std::size_t max_degree = 0;
    };
    struct LazyPairs {
        std::once_flag once;
        PairIndex index;
    };

    const PairIndex& pair_index() const;

    std::size_t n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::uint32_t> inc_offsets_{0};
    std::vector<EdgeId> inc_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
    std::optional<std::vector<int>> partition_;
    std::shared_ptr<LazyPairs> pairs_ = std::make_shared<LazyPairs>();
};

/// A nonempty edge subset in which every covered vertex has degree >= 2.
struct CoreCertificate {
    std::vector<Triple> edges;     // sorted, distinct
    std::vector<Vertex> vertices;  // sorted union of the edges

    /// Normalizes (sorts, dedups) and derives the vertex set. No validation.
    static CoreCertificate from_edges(std::vector<Triple> edges);

    /// Checks the certificate invariants, independent of any host.
    bool valid() const;
    bool operator==(const CoreCertificate&) const = default;
};

/// At most k vertices spanning at least l listed edges.
struct ConfigWitness {
    std::size_t k = 0;
    std::size_t l = 0;
    std::vector<Vertex> vertices;  // sorted
    std::vector<Triple> edges;     // sorted, distinct

    static ConfigWitness from_edges(std::size_t k, std::size_t l, std::vector<Triple> edges);
    bool valid() const;
    bool operator==(const ConfigWitness&) const = default;
};

/// True iff the edge list is nonempty and every covered vertex lies in >= 2
/// of the edges. Duplicate triples count once.
bool min_degree_two(std::span<const Triple> edges);

/// Sorted union of the vertices of the edges.
std::vector<Vertex> covered_vertices(std::span<const Triple> edges);

struct InducedSubgraph {
    Hypergraph3 graph;
    std::vector<Vertex> to_host;  // local index -> host vertex

    Triple lift(const Triple& t) const {
        return make_triple(to_host[t[0]], to_host[t[1]], to_host[t[2]]);
    }
};

/// All host edges inside S, relabeled to 0..|S|-1 in ascending host order.
/// The partition, when present, is carried over.
InducedSubgraph induced(const Hypergraph3& h, std::span<const Vertex> s);

/// Assigns every vertex one of three classes uniformly at random and keeps
/// only the transversal edges. With honor_existing set and a 3-class
/// partition present, that partition is used instead of a random one.
Hypergraph3 random_tripartition(const Hypergraph3& h, std::uint64_t seed,
                                bool honor_existing = false);

}  // namespace hypercore
