#include "hypercore/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace hypercore {

namespace {

constexpr std::size_t kMaxVertices = std::size_t{1} << 21;

std::uint64_t triple_key(const Triple& t) {
    return (static_cast<std::uint64_t>(t[0]) << 42) | (static_cast<std::uint64_t>(t[1]) << 21) | t[2];
}

std::string show(const Triple& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

}  // namespace

Triple make_triple(Vertex a, Vertex b, Vertex c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return {a, b, c};
}

int shared_vertices(const Triple& a, const Triple& b) {
    int s = 0;
    for (Vertex x : a)
        if (triple_contains(b, x)) ++s;
    return s;
}

Hypergraph3 Hypergraph3::build(std::size_t n, std::vector<Triple> edges,
                               std::optional<std::vector<int>> partition) {
    if (n > kMaxVertices) throw std::invalid_argument("too many vertices: " + std::to_string(n));
    Hypergraph3 h;
    h.n_ = n;
    h.edge_index_.reserve(edges.size() * 2);
    std::vector<std::uint32_t> deg(n, 0);
    for (auto& raw : edges) {
        Triple t = make_triple(raw[0], raw[1], raw[2]);
        if (t[2] >= n) throw std::invalid_argument("vertex out of range in edge " + show(raw));
        if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("repeated vertex in edge " + show(raw));
        auto [it, fresh] = h.edge_index_.emplace(triple_key(t), static_cast<EdgeId>(h.edges_.size()));
        if (!fresh) throw std::invalid_argument("duplicate edge " + show(t));
        h.edges_.push_back(t);
        for (Vertex v : t) ++deg[v];
    }

    h.inc_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) h.inc_offsets_[v + 1] = h.inc_offsets_[v] + deg[v];
    h.inc_.resize(h.inc_offsets_[n]);
    std::vector<std::uint32_t> fill(h.inc_offsets_.begin(), h.inc_offsets_.end() - 1);
    for (EdgeId e = 0; e < h.edges_.size(); ++e)
        for (Vertex v : h.edges_[e]) h.inc_[fill[v]++] = e;

    if (partition) {
        if (partition->size() != n)
            throw std::invalid_argument("partition size " + std::to_string(partition->size()) +
                                        " does not match vertex count " + std::to_string(n));
        h.partition_ = std::move(partition);
        if (h.num_classes() == 3) {
            const auto& cls = *h.partition_;
            for (const auto& t : h.edges_) {
                if (cls[t[0]] == cls[t[1]] || cls[t[0]] == cls[t[2]] || cls[t[1]] == cls[t[2]])
                    throw std::invalid_argument("edge " + show(t) + " is not transversal to the partition");
            }
        }
    }
    return h;
}

std::optional<EdgeId> Hypergraph3::find_edge(const Triple& t) const {
    Triple s = make_triple(t[0], t[1], t[2]);
    if (s[2] >= n_) return std::nullopt;
    auto it = edge_index_.find(triple_key(s));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

const Hypergraph3::PairIndex& Hypergraph3::pair_index() const {
    std::call_once(pairs_->once, [this] {
        PairIndex& idx = pairs_->index;
        std::vector<std::pair<std::uint64_t, EdgeId>> entries;
        entries.reserve(edges_.size() * 3);
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            const Triple& t = edges_[e];
            entries.emplace_back(pair_key(t[0], t[1]), e);
            entries.emplace_back(pair_key(t[0], t[2]), e);
            entries.emplace_back(pair_key(t[1], t[2]), e);
        }
        std::sort(entries.begin(), entries.end());
        idx.edges.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i == 0 || entries[i].first != entries[i - 1].first) {
                idx.slot.emplace(entries[i].first, static_cast<std::uint32_t>(idx.keys.size()));
                idx.keys.push_back(entries[i].first);
                idx.offsets.push_back(static_cast<std::uint32_t>(idx.edges.size()));
            }
            idx.edges.push_back(entries[i].second);
        }
        idx.offsets.push_back(static_cast<std::uint32_t>(idx.edges.size()));
        for (std::size_t i = 0; i + 1 < idx.offsets.size(); ++i)
            idx.max_degree = std::max<std::size_t>(idx.max_degree, idx.offsets[i + 1] - idx.offsets[i]);
    });
    return pairs_->index;
}

std::span<const EdgeId> Hypergraph3::pair_edges(Vertex u, Vertex v) const {
    if (u == v) throw std::invalid_argument("pair degree needs two distinct vertices");
    if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    const PairIndex& idx = pair_index();
    auto it = idx.slot.find(pair_key(u, v));
    if (it == idx.slot.end()) return {};
    return {idx.edges.data() + idx.offsets[it->second], idx.edges.data() + idx.offsets[it->second + 1]};
}

std::size_t Hypergraph3::pair_degree(Vertex u, Vertex v) const {
    return pair_edges(u, v).size();
}

int Hypergraph3::num_classes() const {
    if (!partition_) return 0;
    std::set<int> labels(partition_->begin(), partition_->end());
    return static_cast<int>(labels.size());
}

std::size_t Hypergraph3::max_pair_degree() const { return pair_index().max_degree; }

bool Hypergraph3::is_linear() const { return max_pair_degree() <= 1; }

CoreCertificate CoreCertificate::from_edges(std::vector<Triple> edges) {
    CoreCertificate c;
    for (auto& t : edges) t = make_triple(t[0], t[1], t[2]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    c.vertices = covered_vertices(edges);
    c.edges = std::move(edges);
    return c;
}

bool CoreCertificate::valid() const {
    if (edges.empty()) return false;
    if (!std::is_sorted(edges.begin(), edges.end())) return false;
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    if (covered_vertices(edges) != vertices) return false;
    if (edges.size() * 3 < 2 * vertices.size()) return false;
    return min_degree_two(edges);
}

ConfigWitness ConfigWitness::from_edges(std::size_t k, std::size_t l, std::vector<Triple> edges) {
    ConfigWitness w;
    w.k = k;
    w.l = l;
    for (auto& t : edges) t = make_triple(t[0], t[1], t[2]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    w.vertices = covered_vertices(edges);
    w.edges = std::move(edges);
    return w;
}

bool ConfigWitness::valid() const {
    if (vertices.size() > k || edges.size() < l) return false;
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    for (const auto& t : edges)
        for (Vertex v : t)
            if (!std::binary_search(vertices.begin(), vertices.end(), v)) return false;
    return true;
}

std::vector<Vertex> covered_vertices(std::span<const Triple> edges) {
    std::vector<Vertex> vs;
    vs.reserve(edges.size() * 3);
    for (const auto& t : edges) vs.insert(vs.end(), t.begin(), t.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool min_degree_two(std::span<const Triple> edges) {
    std::vector<Triple> es(edges.begin(), edges.end());
    for (auto& t : es) t = make_triple(t[0], t[1], t[2]);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (es.empty()) return false;
    std::vector<Vertex> occurrences;
    for (const auto& t : es) occurrences.insert(occurrences.end(), t.begin(), t.end());
    std::sort(occurrences.begin(), occurrences.end());
    for (std::size_t i = 0; i < occurrences.size();) {
        std::size_t j = i;
        while (j < occurrences.size() && occurrences[j] == occurrences[i]) ++j;
        if (j - i < 2) return false;
        i = j;
    }
    return true;
}

InducedSubgraph induced(const Hypergraph3& h, std::span<const Vertex> s) {
    InducedSubgraph out;
    out.to_host.assign(s.begin(), s.end());
    std::sort(out.to_host.begin(), out.to_host.end());
    out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());

    constexpr Vertex kAbsent = ~Vertex{0};
    std::vector<Vertex> local(h.num_vertices(), kAbsent);
    for (std::size_t i = 0; i < out.to_host.size(); ++i) {
        Vertex v = out.to_host[i];
        if (v >= h.num_vertices()) throw std::invalid_argument("induced: vertex out of range");
        local[v] = static_cast<Vertex>(i);
    }

    std::vector<EdgeId> ids;
    for (Vertex v : out.to_host) {
        for (EdgeId e : h.incident(v)) {
            const Triple& t = h.edge(e);
            if (t[0] == v && local[t[1]] != kAbsent && local[t[2]] != kAbsent) ids.push_back(e);
        }
    }
    std::sort(ids.begin(), ids.end());

    std::vector<Triple> edges;
    edges.reserve(ids.size());
    for (EdgeId e : ids) {
        const Triple& t = h.edge(e);
        edges.push_back({local[t[0]], local[t[1]], local[t[2]]});
    }

    std::optional<std::vector<int>> part;
    if (h.partition()) {
        part.emplace();
        for (Vertex v : out.to_host) part->push_back((*h.partition())[v]);
    }
    out.graph = Hypergraph3::build(out.to_host.size(), std::move(edges), std::move(part));
    return out;
}

Hypergraph3 random_tripartition(const Hypergraph3& h, std::uint64_t seed, bool honor_existing) {
    std::vector<int> cls;
    if (honor_existing && h.is_tripartite()) {
        // Relabel to 0, 1, 2 in order of first appearance.
        std::vector<int> labels;
        for (int c : *h.partition())
            if (std::find(labels.begin(), labels.end(), c) == labels.end()) labels.push_back(c);
        for (int c : *h.partition())
            cls.push_back(static_cast<int>(std::find(labels.begin(), labels.end(), c) - labels.begin()));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, 2);
        cls.resize(h.num_vertices());
        for (auto& c : cls) c = pick(rng);
    }
    std::vector<Triple> kept;
    for (const auto& t : h.edges())
        if (cls[t[0]] != cls[t[1]] && cls[t[0]] != cls[t[2]] && cls[t[1]] != cls[t[2]]) kept.push_back(t);
    return Hypergraph3::build(h.num_vertices(), std::move(kept), std::move(cls));
}

}  // namespace hypercore
