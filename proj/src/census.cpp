#include "hypercore/census.hpp"

#include <algorithm>
#include <unordered_map>

namespace hypercore {

namespace {

std::uint64_t key3(Vertex p, Vertex q, Vertex r) {
    return (std::uint64_t{p} << 42) | (std::uint64_t{q} << 21) | r;
}

Vertex third_vertex(const Triple& t, Vertex x, Vertex y) {
    for (Vertex v : t)
        if (v != x && v != y) return v;
    return t[0];
}

// Streams intersecting pairs in base-pair order; stops when f returns true.
template <typename F>
bool scan_intersecting_pairs(const Hypergraph3& h, F&& f) {
    bool stop = false;
    h.for_each_covered_pair([&](Vertex x, Vertex y, std::span<const EdgeId> es) {
        if (stop || es.size() < 2) return;
        for (std::size_t i = 0; i < es.size() && !stop; ++i) {
            for (std::size_t j = i + 1; j < es.size() && !stop; ++j) {
                Vertex a = third_vertex(h.edge(es[i]), x, y);
                Vertex b = third_vertex(h.edge(es[j]), x, y);
                if (a > b) std::swap(a, b);
                stop = f(IntersectingPair{x, y, a, b});
            }
        }
    });
    return stop;
}

std::vector<Triple> pair_edges_of(const IntersectingPair& p) {
    return {make_triple(p.x, p.y, p.a), make_triple(p.x, p.y, p.b)};
}

std::uint64_t choose2(std::uint64_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

}  // namespace

std::vector<IntersectingPair> intersecting_pairs(const Hypergraph3& h) {
    std::vector<IntersectingPair> out;
    scan_intersecting_pairs(h, [&](const IntersectingPair& p) {
        out.push_back(p);
        return false;
    });
    return out;
}

std::uint64_t pair_census(const Hypergraph3& h) {
    std::uint64_t total = 0;
    h.for_each_covered_pair([&](Vertex, Vertex, std::span<const EdgeId> es) { total += choose2(es.size()); });
    return total;
}

std::uint64_t six_core_threshold(std::size_t n) { return choose2(n); }

std::uint64_t k221_threshold(std::size_t n) {
    if (n < 3) return 0;
    return 2 * (std::uint64_t{n} * (n - 1) * (n - 2) / 6);
}

std::optional<ConfigWitness> find_k221(const Hypergraph3& h) {
    std::unordered_map<std::uint64_t, Vertex> partner;
    std::optional<ConfigWitness> found;
    scan_intersecting_pairs(h, [&](const IntersectingPair& p) {
        // File the pair under each base vertex; the other base vertex is the partner.
        for (auto [apex, other] : {std::pair{p.x, p.y}, std::pair{p.y, p.x}}) {
            auto [it, fresh] = partner.emplace(key3(apex, p.a, p.b), other);
            if (fresh || it->second == other) continue;
            std::vector<Triple> es{make_triple(apex, other, p.a), make_triple(apex, other, p.b),
                                   make_triple(apex, it->second, p.a), make_triple(apex, it->second, p.b)};
            if (!min_degree_two(es)) continue;
            found = ConfigWitness::from_edges(5, 4, std::move(es));
            return true;
        }
        return false;
    });
    return found;
}

std::optional<ConfigWitness> find_6core(const Hypergraph3& h) {
    std::unordered_map<std::uint64_t, std::pair<Vertex, Vertex>> base_of;
    std::optional<ConfigWitness> found;
    scan_intersecting_pairs(h, [&](const IntersectingPair& p) {
        auto [it, fresh] = base_of.emplace(pair_key(p.a, p.b), std::pair{p.x, p.y});
        if (fresh) return false;
        auto [u, w] = it->second;
        std::vector<Triple> es = pair_edges_of(p);
        es.push_back(make_triple(u, w, p.a));
        es.push_back(make_triple(u, w, p.b));
        if (!min_degree_two(es)) return false;
        found = ConfigWitness::from_edges(6, 4, std::move(es));
        return true;
    });
    return found;
}

std::optional<IntersectionC4> intersection_graph_c4(const Hypergraph3& h) {
    std::vector<IntersectingPair> pairs;
    std::unordered_map<std::uint64_t, std::size_t> by_thirds;
    std::optional<IntersectionC4> doubled;
    scan_intersecting_pairs(h, [&](const IntersectingPair& p) {
        auto [it, fresh] = by_thirds.emplace(pair_key(p.a, p.b), pairs.size());
        if (!fresh) {
            const IntersectingPair& q = pairs[it->second];
            std::vector<Triple> es = pair_edges_of(p);
            for (const auto& t : pair_edges_of(q)) es.push_back(t);
            if (min_degree_two(es)) {
                doubled = IntersectionC4{ConfigWitness::from_edges(6, 4, std::move(es)), true};
                return true;
            }
            return false;
        }
        pairs.push_back(p);
        return false;
    });
    if (doubled) return doubled;

    const std::size_t n = h.num_vertices();
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);  // (neighbor, pair index)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        adj[pairs[i].a].emplace_back(pairs[i].b, i);
        adj[pairs[i].b].emplace_back(pairs[i].a, i);
    }

    // Paths v - u - w of length two, bucketed by w; two middles close a 4-cycle.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> via(n);  // (pair v-u, pair u-w)
    std::vector<Vertex> touched;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : touched) via[w].clear();
        touched.clear();
        for (auto [u, p1] : adj[v]) {
            for (auto [w, p2] : adj[u]) {
                if (w == v) continue;
                for (auto [q1, q2] : via[w]) {
                    std::vector<Triple> es;
                    for (std::size_t idx : {p1, p2, q1, q2})
                        for (const auto& t : pair_edges_of(pairs[idx])) es.push_back(t);
                    auto witness = ConfigWitness::from_edges(12, 8, std::move(es));
                    if (witness.valid() && min_degree_two(witness.edges)) return IntersectionC4{std::move(witness), false};
                }
                if (via[w].empty()) touched.push_back(w);
                via[w].emplace_back(p1, p2);
            }
        }
    }
    return std::nullopt;
}

}  // namespace hypercore
