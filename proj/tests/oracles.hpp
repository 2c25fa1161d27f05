#pragma once
// Brute-force reference implementations. Exponential; small inputs only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hypercore/constructions.hpp"
#include "hypercore/hypergraph.hpp"

namespace oracle {

using hypercore::Hypergraph3;
using hypercore::Triple;
using hypercore::Vertex;

// Edges fully inside the vertex mask.
inline std::vector<Triple> induced_edges(const Hypergraph3& h, std::uint64_t mask) {
    std::vector<Triple> out;
    for (const auto& t : h.edges())
        if ((mask >> t[0] & 1) && (mask >> t[1] & 1) && (mask >> t[2] & 1)) out.push_back(t);
    return out;
}

// Naive fixpoint stripping, no incidence lists.
inline std::vector<Triple> strip(std::vector<Triple> es) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Vertex, int> deg;
        for (const auto& t : es)
            for (Vertex v : t) ++deg[v];
        std::vector<Triple> keep;
        for (const auto& t : es) {
            bool ok = deg[t[0]] >= 2 && deg[t[1]] >= 2 && deg[t[2]] >= 2;
            if (ok) keep.push_back(t);
            else changed = true;
        }
        es = std::move(keep);
    }
    std::sort(es.begin(), es.end());
    return es;
}

inline bool is_core(const std::vector<Triple>& es) {
    if (es.empty()) return false;
    std::map<Vertex, int> deg;
    for (const auto& t : es)
        for (Vertex v : t) ++deg[v];
    for (auto [v, d] : deg)
        if (d < 2) return false;
    return true;
}

inline std::vector<Vertex> mask_vertices(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

// Vertex masks with popcount s in lexicographic order of their sorted vertex lists.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t s, F&& f) {
    std::vector<Vertex> idx(s);
    if (s > n) return false;
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<Vertex>(i);
    while (true) {
        std::uint64_t mask = 0;
        for (Vertex v : idx) mask |= std::uint64_t{1} << v;
        if (f(mask)) return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct MinCore {
    std::vector<Vertex> vertices;
    std::vector<Triple> edges;
};

// Smallest core on at most k_max vertices; ties go to the lexicographically
// smallest vertex set. With exact, only cores on exactly k_max vertices.
inline std::optional<MinCore> min_core(const Hypergraph3& h, std::size_t k_max, bool exact = false) {
    const std::size_t n = h.num_vertices();
    for (std::size_t s = exact ? k_max : 1; s <= std::min(k_max, n); ++s) {
        std::optional<MinCore> hit;
        for_each_subset(n, s, [&](std::uint64_t mask) {
            auto core = strip(induced_edges(h, mask));
            if (core.empty()) return false;
            auto vs = hypercore::covered_vertices(core);
            if (vs.size() != s) return false;
            hit = MinCore{vs, core};
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

// k vertices (or all of them, if fewer) spanning at least l edges.
inline bool has_config(const Hypergraph3& h, std::size_t k, std::size_t l) {
    const std::size_t s = std::min(k, h.num_vertices());
    return for_each_subset(h.num_vertices(), s,
                           [&](std::uint64_t mask) { return induced_edges(h, mask).size() >= l; });
}

// All (6,3) configurations as sorted edge triples.
inline std::set<std::array<Triple, 3>> configs63(const Hypergraph3& h) {
    std::set<std::array<Triple, 3>> out;
    const auto& es = h.edges();
    auto meet = [](const Triple& a, const Triple& b) -> std::vector<Vertex> {
        std::vector<Vertex> c;
        for (Vertex v : a)
            if (std::find(b.begin(), b.end(), v) != b.end()) c.push_back(v);
        return c;
    };
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            for (std::size_t k = j + 1; k < es.size(); ++k) {
                auto ij = meet(es[i], es[j]), ik = meet(es[i], es[k]), jk = meet(es[j], es[k]);
                if (ij.size() != 1 || ik.size() != 1 || jk.size() != 1) continue;
                std::set<Vertex> shared{ij[0], ik[0], jk[0]};
                if (shared.size() != 3) continue;
                std::set<Vertex> all;
                for (const auto* t : {&es[i], &es[j], &es[k]}) all.insert(t->begin(), t->end());
                if (all.size() != 6) continue;
                std::array<Triple, 3> key{es[i], es[j], es[k]};
                std::sort(key.begin(), key.end());
                out.insert(key);
            }
    return out;
}

inline std::uint64_t pair_census(const Hypergraph3& h) {
    std::uint64_t total = 0;
    for (Vertex u = 0; u < h.num_vertices(); ++u)
        for (Vertex v = u + 1; v < h.num_vertices(); ++v) {
            std::uint64_t d = 0;
            for (const auto& t : h.edges())
                if (std::find(t.begin(), t.end(), u) != t.end() && std::find(t.begin(), t.end(), v) != t.end()) ++d;
            total += d * (d - (d ? 1 : 0)) / 2;
        }
    return total;
}

// Every ordered quadruple of group elements.
inline std::uint64_t count_74(const hypercore::GroupTripleSystem& g) {
    const std::size_t m = g.group.order();
    std::set<std::pair<std::uint32_t, std::uint32_t>> s(g.pairs.begin(), g.pairs.end());
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b)
            for (std::uint32_t c = 0; c < m; ++c)
                for (std::uint32_t d = 0; d < m; ++d) {
                    if (a == d || b == c) continue;
                    if (g.group.mul(a, b) != g.group.mul(d, c)) continue;
                    if (s.count({a, b}) && s.count({a, c}) && s.count({d, c}) && s.count({d, b})) ++count;
                }
    return count;
}

// Pair-graph edges counted straight from the definition: unordered pairs of
// distinct host edges through a common middle vertex, four orientations each.
inline std::size_t pair_graph_edges(const Hypergraph3& h) {
    std::size_t count = 0;
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            for (Vertex r : es[i])
                if (std::find(es[j].begin(), es[j].end(), r) != es[j].end()) count += 4;
    return count;
}

inline Hypergraph3 random_small(std::mt19937_64& rng, std::size_t n_max, std::size_t m_max) {
    std::uniform_int_distribution<std::size_t> nd(4, n_max);
    std::size_t n = nd(rng);
    std::size_t cap = n * (n - 1) * (n - 2) / 6;
    std::uniform_int_distribution<std::size_t> md(0, std::min(cap, m_max));
    return hypercore::random_uniform(n, md(rng), rng());
}

}  // namespace oracle
