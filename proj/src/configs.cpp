#include "hypercore/configs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace hypercore {

LinearizeResult linearize(const Hypergraph3& h) {
    std::vector<char> dropped(h.num_edges(), 0);
    std::vector<Triple> kept;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (dropped[e]) continue;
        const Triple& t = h.edge(e);
        kept.push_back(t);
        for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}})
            for (EdgeId f : h.pair_edges(u, v))
                if (f > e) dropped[f] = 1;
    }
    LinearizeResult r;
    r.retained_fraction = h.num_edges() == 0 ? 1.0 : static_cast<double>(kept.size()) / h.num_edges();
    r.graph = Hypergraph3::build(h.num_vertices(), std::move(kept), h.partition());
    return r;
}

namespace {

Vertex other_vertex(const Triple& t, Vertex x, Vertex y) {
    for (Vertex v : t)
        if (v != x && v != y) return v;
    return t[0];
}

std::optional<Vertex> common_vertex(const Triple& a, const Triple& b) {
    std::optional<Vertex> c;
    for (Vertex v : a)
        if (triple_contains(b, v)) {
            if (c) return std::nullopt;
            c = v;
        }
    return c;
}

std::array<Vertex, 3> sorted3(Vertex a, Vertex b, Vertex c) { return make_triple(a, b, c); }

}  // namespace

std::vector<SixThreeConfig> enumerate_63(const Hypergraph3& h, std::size_t limit) {
    if (!h.is_linear()) throw std::invalid_argument("enumerate_63: host is not linear");
    std::vector<SixThreeConfig> out;
    // Each configuration is produced once: e1 is its lowest edge id, and the
    // edge through x precedes the edge through y.
    for (EdgeId e1 = 0; e1 < h.num_edges(); ++e1) {
        const Triple& t1 = h.edge(e1);
        for (Vertex x : t1) {
            for (Vertex y : t1) {
                if (x == y) continue;
                for (EdgeId e2 : h.incident(x)) {
                    if (e2 <= e1) continue;
                    for (EdgeId e3 : h.incident(y)) {
                        if (e3 <= e2) continue;
                        auto z = common_vertex(h.edge(e2), h.edge(e3));
                        if (!z) continue;
                        const Triple& t2 = h.edge(e2);
                        const Triple& t3 = h.edge(e3);
                        SixThreeConfig c;
                        c.edges = {t1, t2, t3};
                        std::sort(c.edges.begin(), c.edges.end());
                        c.deg2 = sorted3(x, y, *z);
                        c.deg1 = sorted3(other_vertex(t1, x, y), other_vertex(t2, x, *z), other_vertex(t3, y, *z));
                        out.push_back(c);
                        if (out.size() >= limit) return out;
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// (k, l) witness search

namespace {

class ConfigSearch {
public:
    ConfigSearch(const Hypergraph3& h, std::size_t k, std::size_t l, std::uint64_t budget)
        : h_(h), k_(k), l_(l), budget_(budget), in_s_(h.num_vertices(), 0), rank_(h.num_vertices(), 0) {
        order_.resize(h.num_vertices());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        for (std::uint32_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
    }

    ConfigSearchResult run(std::span<const Vertex> required) {
        ConfigSearchResult res;
        for (Vertex v : required)
            if (!in_s_[v]) add(v);
        if (members_.size() > k_) {
            res.status = SearchStatus::none;
            return res;
        }
        if (greedy(res)) return res;
        // Vertices of degree 0 never help.
        std::size_t end = order_.size();
        while (end > 0 && h_.degree(order_[end - 1]) == 0) --end;
        order_end_ = end;
        bool hit = dfs(0, res);
        res.nodes_expanded = nodes_;
        if (hit) {
            res.status = SearchStatus::found;
        } else if (nodes_ > budget_) {
            res.status = SearchStatus::budget_exhausted;
            res.nodes_expanded = budget_;
        } else {
            res.status = SearchStatus::none;
        }
        return res;
    }

private:
    void add(Vertex w) {
        for (EdgeId e : h_.incident(w)) {
            const Triple& t = h_.edge(e);
            bool inside = true;
            for (Vertex x : t)
                if (x != w && !in_s_[x]) inside = false;
            if (inside) ++edges_in_;
        }
        in_s_[w] = 1;
        members_.push_back(w);
    }

    void remove(Vertex w) {
        in_s_[w] = 0;
        for (EdgeId e : h_.incident(w)) {
            const Triple& t = h_.edge(e);
            bool inside = true;
            for (Vertex x : t)
                if (x != w && !in_s_[x]) inside = false;
            if (inside) --edges_in_;
        }
        members_.pop_back();
    }

    std::size_t gain(Vertex w) const {
        std::size_t g = 0;
        for (EdgeId e : h_.incident(w)) {
            const Triple& t = h_.edge(e);
            bool inside = true;
            for (Vertex x : t)
                if (x != w && !in_s_[x]) inside = false;
            if (inside) ++g;
        }
        return g;
    }

    void make_witness(ConfigSearchResult& res) const {
        std::vector<Triple> es;
        for (Vertex v : members_)
            for (EdgeId e : h_.incident(v)) {
                const Triple& t = h_.edge(e);
                if (t[0] == v && in_s_[t[1]] && in_s_[t[2]]) es.push_back(t);
            }
        res.witness = ConfigWitness::from_edges(k_, l_, std::move(es));
        res.status = SearchStatus::found;
    }

    // Greedy growth from the required set, or from the highest pair degrees.
    bool greedy(ConfigSearchResult& res) {
        if (edges_in_ >= l_) {
            make_witness(res);
            return true;
        }
        std::vector<std::vector<Vertex>> seeds;
        if (!members_.empty()) {
            seeds.push_back(members_);
        } else {
            std::vector<std::pair<std::size_t, std::uint64_t>> pairs;
            h_.for_each_covered_pair([&](Vertex u, Vertex v, std::span<const EdgeId> es) {
                if (es.size() >= 2) pairs.emplace_back(es.size(), pair_key(u, v));
            });
            std::stable_sort(pairs.begin(), pairs.end(), [](auto& a, auto& b) { return a.first > b.first; });
            for (std::size_t i = 0; i < pairs.size() && seeds.size() < 64; ++i) {
                auto [u, v] = unpack_pair(pairs[i].second);
                seeds.push_back({u, v});
            }
            for (EdgeId e = 0; e < h_.num_edges() && seeds.size() < 128; ++e)
                seeds.push_back({h_.edge(e).begin(), h_.edge(e).end()});
        }
        const std::vector<Vertex> base = members_;
        for (const auto& seed : seeds) {
            std::vector<Vertex> added;
            for (Vertex v : seed)
                if (!in_s_[v]) {
                    add(v);
                    added.push_back(v);
                }
            while (members_.size() < k_ && edges_in_ < l_) {
                Vertex best = 0;
                std::size_t best_gain = 0;
                bool any = false;
                for (Vertex s : members_)
                    for (EdgeId e : h_.incident(s))
                        for (Vertex w : h_.edge(e)) {
                            if (in_s_[w]) continue;
                            std::size_t g = gain(w);
                            if (!any || g > best_gain || (g == best_gain && w < best)) {
                                best = w;
                                best_gain = g;
                                any = true;
                            }
                        }
                if (!any) break;
                add(best);
                added.push_back(best);
            }
            bool hit = edges_in_ >= l_ && members_.size() <= k_;
            if (hit) {
                make_witness(res);
                res.nodes_expanded = nodes_;
            }
            while (!added.empty()) {
                remove(added.back());
                added.pop_back();
            }
            if (hit) return true;
        }
        (void)base;
        return false;
    }

    bool dfs(std::size_t next, ConfigSearchResult& res) {
        if (++nodes_ > budget_) return false;
        if (edges_in_ >= l_) {
            make_witness(res);
            return true;
        }
        if (members_.size() >= k_) return false;
        const std::size_t room = k_ - members_.size();

        // Upper bound: current edges plus the best `room` candidate gains,
        // counting an edge for each of its new vertices.
        gains_scratch_.clear();
        for (std::size_t i = next; i < order_end_; ++i) {
            Vertex w = order_[i];
            if (in_s_[w]) continue;
            std::size_t g = 0;
            for (EdgeId e : h_.incident(w)) {
                const Triple& t = h_.edge(e);
                bool reachable = true;
                for (Vertex x : t)
                    if (x != w && !in_s_[x] && rank_[x] < next) reachable = false;
                if (reachable) ++g;
            }
            if (g > 0) gains_scratch_.push_back(g);
        }
        std::size_t take = std::min(room, gains_scratch_.size());
        std::partial_sort(gains_scratch_.begin(), gains_scratch_.begin() + static_cast<std::ptrdiff_t>(take),
                          gains_scratch_.end(), std::greater<>());
        std::size_t ub = edges_in_;
        for (std::size_t i = 0; i < take; ++i) ub += gains_scratch_[i];
        if (ub < l_) return false;

        for (std::size_t i = next; i < order_end_; ++i) {
            Vertex w = order_[i];
            if (in_s_[w]) continue;
            add(w);
            bool hit = dfs(i + 1, res);
            remove(w);
            if (hit) return true;
            if (nodes_ > budget_) return false;
        }
        return false;
    }

    const Hypergraph3& h_;
    std::size_t k_, l_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<char> in_s_;
    std::vector<Vertex> order_;
    std::vector<std::uint32_t> rank_;
    std::size_t order_end_ = 0;
    std::vector<Vertex> members_;
    std::size_t edges_in_ = 0;
    std::vector<std::size_t> gains_scratch_;
};

}  // namespace

ConfigSearchResult find_config(const Hypergraph3& h, std::size_t k, std::size_t l, std::uint64_t budget) {
    if (k < 4 || l < 2) throw std::invalid_argument("find_config: needs k >= 4 and l >= 2");
    ConfigSearch search(h, k, l, budget);
    return search.run({});
}

ConfigSearchResult find_config_through(const Hypergraph3& h, const Triple& edge, std::size_t k, std::size_t l,
                                       std::uint64_t budget) {
    if (k < 4 || l < 2) throw std::invalid_argument("find_config: needs k >= 4 and l >= 2");
    if (!h.contains(edge)) throw std::invalid_argument("find_config_through: edge not in host");
    ConfigSearch search(h, k, l, budget);
    return search.run(edge);
}

// ---------------------------------------------------------------------------
// Aux clique hypergraph

namespace {

std::vector<int> normalized_classes(const Hypergraph3& h) {
    std::vector<int> labels;
    for (int c : *h.partition())
        if (std::find(labels.begin(), labels.end(), c) == labels.end()) labels.push_back(c);
    std::sort(labels.begin(), labels.end());
    std::vector<int> cls;
    for (int c : *h.partition())
        cls.push_back(static_cast<int>(std::find(labels.begin(), labels.end(), c) - labels.begin()));
    return cls;
}

std::array<Vertex, 4> clique_of(const std::array<Vertex, 6>& v) { return {v[2], v[3], v[1], v[5]}; }

Triple face(const std::array<Vertex, 4>& q, FaceCase c) {
    // q = (v2, v3, v1, v5)
    switch (c) {
        case FaceCase::one: return make_triple(q[0], q[1], q[2]);
        case FaceCase::two: return make_triple(q[0], q[1], q[3]);
        case FaceCase::three: return make_triple(q[1], q[2], q[3]);
        case FaceCase::four: return make_triple(q[0], q[2], q[3]);
    }
    return {};
}

constexpr std::array<FaceCase, 4> kCases{FaceCase::one, FaceCase::two, FaceCase::three, FaceCase::four};

}  // namespace

FaceCase AuxCliqueHypergraph::face_case(const Triple& t) const {
    bool has[6] = {};
    for (Vertex v : t) has[subclass[v]] = true;
    if (has[2] && has[3] && has[1]) return FaceCase::one;
    if (has[2] && has[3] && has[5]) return FaceCase::two;
    if (has[3] && has[1] && has[5]) return FaceCase::three;
    return FaceCase::four;
}

std::size_t AuxCliqueHypergraph::max_multiplicity(FaceCase c) const {
    std::size_t best = 0;
    for (const auto& [t, ids] : faces)
        if (face_case(t) == c) best = std::max(best, ids.size());
    return best;
}

AuxCliqueHypergraph build_aux(const Hypergraph3& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<int> bits(h.num_vertices());
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    return build_aux(h, bits);
}

AuxCliqueHypergraph build_aux(const Hypergraph3& h, const std::vector<int>& split_bits) {
    if (!h.is_tripartite()) throw std::invalid_argument("build_aux: host is not tripartite");
    if (!h.is_linear()) throw std::invalid_argument("build_aux: host is not linear");
    if (split_bits.size() != h.num_vertices()) throw std::invalid_argument("build_aux: split size mismatch");

    AuxCliqueHypergraph a;
    const std::vector<int> cls = normalized_classes(h);
    a.subclass.resize(h.num_vertices());
    for (std::size_t v = 0; v < cls.size(); ++v) a.subclass[v] = 2 * cls[v] + (split_bits[v] ? 1 : 0);

    auto all = enumerate_63(h);
    a.total_configs = all.size();
    // Degree-2 vertices sit in V0, V3, V4 and degree-1 vertices in V1, V2, V5;
    // the host class fixes each role.
    constexpr std::array<int, 3> kDeg2Role{0, 3, 4};
    constexpr std::array<int, 3> kDeg1Role{1, 2, 5};
    for (auto& c : all) {
        std::array<Vertex, 6> v{};
        for (Vertex x : c.deg2) v[kDeg2Role[cls[x]]] = x;
        for (Vertex x : c.deg1) v[kDeg1Role[cls[x]]] = x;
        bool laid_out = true;
        for (int i = 0; i < 6; ++i)
            if (a.subclass[v[i]] != i) laid_out = false;
        if (!laid_out) continue;
        c.roles = v;
        const std::size_t idx = a.configs.size();
        a.configs.push_back(c);
        auto q = clique_of(v);
        a.cliques.push_back(q);
        for (FaceCase fc : kCases) a.faces[face(q, fc)].push_back(idx);
    }

    // Three configs on one case-4 face: a (12,9) system; one more incident
    // host edge makes it a (14,10) configuration.
    for (const auto& [t, ids] : a.faces) {
        if (ids.size() < 3 || a.face_case(t) != FaceCase::four) continue;
        std::vector<Triple> es;
        for (std::size_t i = 0; i < 3; ++i)
            for (const auto& e : a.configs[ids[i]].edges) es.push_back(e);
        std::sort(es.begin(), es.end());
        auto vs = covered_vertices(es);
        std::vector<Triple> host_sorted = h.edges();
        std::sort(host_sorted.begin(), host_sorted.end());
        for (const auto& e : host_sorted) {
            if (std::binary_search(es.begin(), es.end(), e)) continue;
            bool incident = false;
            for (Vertex x : e)
                if (std::binary_search(vs.begin(), vs.end(), x)) incident = true;
            if (!incident) continue;
            std::vector<Triple> w = es;
            w.push_back(e);
            auto witness = ConfigWitness::from_edges(14, 10, std::move(w));
            if (witness.valid()) {
                a.short_circuit = std::move(witness);
                break;
            }
        }
        if (a.short_circuit) break;
    }
    return a;
}

std::vector<std::array<Vertex, 4>> aux_cliques(const AuxCliqueHypergraph& a) {
    // Case-2 faces indexed by their (v2, v3) pair.
    std::unordered_map<std::uint64_t, std::vector<Vertex>> fifth;
    std::vector<std::array<Vertex, 3>> case1;  // (v2, v3, v1)
    for (const auto& [t, ids] : a.faces) {
        std::array<Vertex, 6> at{};
        for (Vertex x : t) at[a.subclass[x]] = x;
        FaceCase c = a.face_case(t);
        if (c == FaceCase::two) fifth[pair_key(at[2], at[3])].push_back(at[5]);
        if (c == FaceCase::one) case1.push_back({at[2], at[3], at[1]});
    }
    std::vector<std::array<Vertex, 4>> out;
    for (auto [v2, v3, v1] : case1) {
        auto it = fifth.find(pair_key(v2, v3));
        if (it == fifth.end()) continue;
        for (Vertex v5 : it->second) {
            if (a.faces.count(make_triple(v3, v1, v5)) && a.faces.count(make_triple(v2, v1, v5)))
                out.push_back({v2, v3, v1, v5});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

K43Count count_k43(const AuxCliqueHypergraph& a) {
    K43Count r;
    auto cliques = aux_cliques(a);
    r.cliques = cliques.size();
    std::vector<Triple> used;
    for (const auto& q : cliques) {
        std::array<Triple, 4> fs{face(q, FaceCase::one), face(q, FaceCase::two), face(q, FaceCase::three),
                                 face(q, FaceCase::four)};
        bool free = true;
        for (const auto& f : fs)
            if (std::find(used.begin(), used.end(), f) != used.end()) free = false;
        if (!free) continue;
        used.insert(used.end(), fs.begin(), fs.end());
        ++r.packing;
    }
    return r;
}

std::optional<ConfigWitness> assemble_1410(const AuxCliqueHypergraph& a) {
    for (const auto& q : aux_cliques(a)) {
        const auto& f1 = a.faces.at(face(q, FaceCase::one));
        const auto& f2 = a.faces.at(face(q, FaceCase::two));
        const auto& f3 = a.faces.at(face(q, FaceCase::three));
        const auto& f4 = a.faces.at(face(q, FaceCase::four));
        for (std::size_t i1 : f1)
            for (std::size_t i2 : f2)
                for (std::size_t i3 : f3)
                    for (std::size_t i4 : f4) {
                        std::array<std::size_t, 4> ids{i1, i2, i3, i4};
                        std::sort(ids.begin(), ids.end());
                        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) continue;
                        std::vector<Triple> es;
                        for (std::size_t id : ids)
                            for (const auto& e : a.configs[id].edges) es.push_back(e);
                        auto w = ConfigWitness::from_edges(14, 10, std::move(es));
                        if (w.valid()) return w;
                    }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// 15-vertex cores from paired (6,3) configurations

namespace {

struct Gadget {
    std::vector<Triple> edges;  // sorted, 5 edges
};

// Degree-1 vertices of an edge multiset-free list.
std::vector<Vertex> degree_one(const std::vector<Triple>& es) {
    std::unordered_map<Vertex, int> deg;
    for (const auto& t : es)
        for (Vertex v : t) ++deg[v];
    std::vector<Vertex> out;
    for (auto [v, d] : deg)
        if (d == 1) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Core15Result find_core15(const Hypergraph3& h, std::uint64_t budget) {
    if (!h.is_linear()) throw std::invalid_argument("find_core15: host is not linear");
    Core15Result res;
    const std::size_t cap = budget == 0 ? 1 : static_cast<std::size_t>(std::min<std::uint64_t>(budget, kUnlimited));
    auto configs = enumerate_63(h, cap);
    const bool truncated = configs.size() >= cap;

    // Configs filed under each pair of their degree-1 vertices.
    std::map<std::uint64_t, std::vector<std::size_t>> by_pair;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& d = configs[i].deg1;
        by_pair[pair_key(d[0], d[1])].push_back(i);
        by_pair[pair_key(d[0], d[2])].push_back(i);
        by_pair[pair_key(d[1], d[2])].push_back(i);
    }

    std::map<std::array<Vertex, 3>, std::vector<Gadget>> by_triple;
    for (const auto& [key, ids] : by_pair) {
        for (std::size_t x = 0; x < ids.size(); ++x) {
            for (std::size_t y = x + 1; y < ids.size(); ++y) {
                std::vector<Triple> joined(configs[ids[x]].edges.begin(), configs[ids[x]].edges.end());
                joined.insert(joined.end(), configs[ids[y]].edges.begin(), configs[ids[y]].edges.end());
                std::sort(joined.begin(), joined.end());
                if (std::adjacent_find(joined.begin(), joined.end()) != joined.end()) continue;
                for (Vertex loose : degree_one(joined)) {
                    Gadget g;
                    for (const auto& t : joined)
                        if (!triple_contains(t, loose)) g.edges.push_back(t);
                    if (g.edges.size() != 5) continue;
                    auto ones = degree_one(g.edges);
                    if (ones.size() != 3) continue;
                    ++res.gadgets;
                    std::array<Vertex, 3> k3{ones[0], ones[1], ones[2]};
                    auto& bucket = by_triple[k3];
                    for (const auto& other : bucket) {
                        std::vector<Triple> all = g.edges;
                        all.insert(all.end(), other.edges.begin(), other.edges.end());
                        auto cert = CoreCertificate::from_edges(std::move(all));
                        if (cert.vertices.size() <= 15 && cert.valid()) {
                            res.status = SearchStatus::found;
                            res.core = std::move(cert);
                            return res;
                        }
                    }
                    bucket.push_back(std::move(g));
                    if (res.gadgets >= budget) {
                        res.status = SearchStatus::budget_exhausted;
                        return res;
                    }
                }
            }
        }
    }
    res.status = truncated ? SearchStatus::budget_exhausted : SearchStatus::none;
    return res;
}

}  // namespace hypercore
