#include "hypercore/core_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace hypercore {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "unknown";
}

bool is_core(const Hypergraph3& h, std::span<const Triple> edges) {
    for (const auto& t : edges) {
        if (!h.contains(t))
            throw std::invalid_argument("is_core: {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                        std::to_string(t[2]) + "} is not a host edge");
    }
    return min_degree_two(edges);
}

std::vector<EdgeId> strip_to_core(const Hypergraph3& h, std::span<const EdgeId> edges) {
    std::vector<char> alive(h.num_edges(), 0);
    std::vector<std::uint32_t> deg(h.num_vertices(), 0);
    for (EdgeId e : edges) {
        if (alive[e]) continue;
        alive[e] = 1;
        for (Vertex v : h.edge(e)) ++deg[v];
    }
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        if (deg[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (deg[v] != 1) continue;
        for (EdgeId e : h.incident(v)) {
            if (!alive[e]) continue;
            alive[e] = 0;
            for (Vertex w : h.edge(e))
                if (--deg[w] == 1) queue.push_back(w);
            break;
        }
    }
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (alive[e]) out.push_back(e);
    return out;
}

std::optional<CoreCertificate> two_core(const Hypergraph3& h) {
    std::vector<EdgeId> all(h.num_edges());
    std::iota(all.begin(), all.end(), EdgeId{0});
    auto kept = strip_to_core(h, all);
    if (kept.empty()) return std::nullopt;
    std::vector<Triple> es;
    for (EdgeId e : kept) es.push_back(h.edge(e));
    return CoreCertificate::from_edges(std::move(es));
}

std::size_t subsample_size(std::size_t n, std::size_t m) {
    if (m == 0) throw std::invalid_argument("subsample_size: needs at least one edge");
    using u128 = unsigned __int128;
    const u128 cube = u128{n} * n * n;
    auto s = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cube) / static_cast<double>(m))));
    while (s > 0 && u128{s - 1} * (s - 1) * m >= cube) --s;
    while (u128{s} * s * m < cube) ++s;
    return s;
}

std::optional<CoreCertificate> subsample_strip(const Hypergraph3& h, std::uint64_t seed, std::size_t retries) {
    const std::size_t n = h.num_vertices();
    const std::size_t s = subsample_size(n, h.num_edges());
    if (s >= n) return two_core(h);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::vector<Vertex> pick;
    for (std::size_t attempt = 0; attempt < retries; ++attempt) {
        pick.clear();
        std::sample(all.begin(), all.end(), std::back_inserter(pick), s, rng);
        InducedSubgraph sub = induced(h, pick);
        auto core = two_core(sub.graph);
        if (!core) continue;
        std::vector<Triple> lifted;
        for (const auto& t : core->edges) lifted.push_back(sub.lift(t));
        return CoreCertificate::from_edges(std::move(lifted));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// min_core

namespace {

struct VertexSetHash {
    std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Vertex v : s) {
            h ^= v;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Class-size feasibility for cores in linear tripartite hosts: a core with
// class sizes (a, b, c) has at most min(ab, ac, bc) edges, and needs at least
// 2 * max(a, b, c) of them and at least ceil(2(a+b+c)/3).
class ClassBound {
public:
    ClassBound(std::size_t bound, bool exact) : bound_(bound), table_((bound + 1) * (bound + 1) * (bound + 1), 0) {
        for (std::size_t a = 0; a <= bound; ++a)
            for (std::size_t b = 0; a + b <= bound; ++b)
                for (std::size_t c = 0; a + b + c <= bound; ++c) {
                    bool ok = admissible(a, b, c) && (!exact || a + b + c == bound);
                    at(a, b, c) = ok;
                }
        // Propagate: (a,b,c) is feasible if some extension is.
        for (std::size_t total = bound; total-- > 0;)
            for (std::size_t a = 0; a <= total; ++a)
                for (std::size_t b = 0; a + b <= total; ++b) {
                    std::size_t c = total - a - b;
                    if (at(a + 1, b, c) || at(a, b + 1, c) || at(a, b, c + 1)) at(a, b, c) = 1;
                }
    }

    bool feasible(std::size_t a, std::size_t b, std::size_t c) const {
        return a + b + c <= bound_ && table_[index(a, b, c)];
    }

private:
    static bool admissible(std::size_t a, std::size_t b, std::size_t c) {
        std::size_t most_edges = std::min({a * b, a * c, b * c});
        std::size_t need = std::max(2 * std::max({a, b, c}), (2 * (a + b + c) + 2) / 3);
        return a + b + c > 0 && most_edges >= need;
    }
    std::size_t index(std::size_t a, std::size_t b, std::size_t c) const {
        return (a * (bound_ + 1) + b) * (bound_ + 1) + c;
    }
    char& at(std::size_t a, std::size_t b, std::size_t c) {
        if (a + b + c > bound_) return dummy_;
        return table_[index(a, b, c)];
    }

    std::size_t bound_;
    std::vector<char> table_;
    char dummy_ = 0;
};

struct Shared {
    const Hypergraph3& h;
    std::size_t k_max;
    MinCoreOptions opts;
    std::vector<std::uint32_t> rank;  // position in root order
    std::vector<char> usable;         // host degree >= 2
    std::vector<int> cls;             // tripartite class, when pruning by class
    std::optional<ClassBound> class_bound;
    bool linear_host = false;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> best_size;

    Shared(const Hypergraph3& host, std::size_t k, const MinCoreOptions& o)
        : h(host), k_max(k), opts(o), best_size(k + 1) {}
};

bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class RootSearch {
public:
    explicit RootSearch(Shared& sh)
        : sh_(sh), in_s_(sh.h.num_vertices(), 0), deg_in_(sh.h.num_vertices(), 0) {}

    // Best core (sorted vertex set) rooted at `root`, or empty.
    std::vector<Vertex> run(Vertex root) {
        root_rank_ = sh_.rank[root];
        best_.clear();
        seen_.clear();
        class_count_ = {0, 0, 0};
        add_vertex(root);
        dfs();
        remove_vertex(root);
        return best_;
    }

private:
    bool allowed(Vertex v) const { return sh_.usable[v] && sh_.rank[v] >= root_rank_; }

    std::size_t bound() const {
        std::size_t b = std::min(sh_.k_max, sh_.best_size.load(std::memory_order_relaxed));
        if (!best_.empty()) b = std::min(b, best_.size());
        return b;
    }

    void add_vertex(Vertex w) {
        const auto& h = sh_.h;
        for (EdgeId e : h.incident(w)) {
            const Triple& t = h.edge(e);
            bool inside = true;
            for (Vertex x : t)
                if (x != w && !in_s_[x]) inside = false;
            if (!inside) continue;
            for (Vertex x : t) ++deg_in_[x];
        }
        in_s_[w] = 1;
        members_.push_back(w);
        if (!sh_.cls.empty()) ++class_count_[sh_.cls[w]];
    }

    void remove_vertex(Vertex w) {
        const auto& h = sh_.h;
        in_s_[w] = 0;
        for (EdgeId e : h.incident(w)) {
            const Triple& t = h.edge(e);
            bool inside = true;
            for (Vertex x : t)
                if (x != w && !in_s_[x]) inside = false;
            if (!inside) continue;
            for (Vertex x : t) --deg_in_[x];
        }
        deg_in_[w] = 0;
        members_.pop_back();
        if (!sh_.cls.empty()) --class_count_[sh_.cls[w]];
    }

    std::size_t new_vertices(const Triple& t) const {
        return (in_s_[t[0]] ? 0 : 1) + (in_s_[t[1]] ? 0 : 1) + (in_s_[t[2]] ? 0 : 1);
    }

    bool edge_usable(const Triple& t, std::size_t limit) const {
        std::size_t fresh = 0;
        for (Vertex x : t) {
            if (in_s_[x]) continue;
            if (!allowed(x)) return false;
            ++fresh;
        }
        return fresh > 0 && members_.size() + fresh <= limit;
    }

    void record() {
        std::vector<Vertex> s = members_;
        std::sort(s.begin(), s.end());
        if (best_.empty() || s.size() < best_.size() || (s.size() == best_.size() && lex_less(s, best_))) {
            best_ = std::move(s);
        }
        // Other roots may prune against this size (ties stay admissible).
        std::size_t cur = sh_.best_size.load();
        while (best_.size() < cur && !sh_.best_size.compare_exchange_weak(cur, best_.size())) {
        }
    }

    bool over_budget() {
        if (sh_.exhausted.load(std::memory_order_relaxed)) return true;
        if (sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > sh_.opts.budget) {
            sh_.exhausted = true;
            return true;
        }
        return false;
    }

    void expand_with(const Triple& t) {
        Vertex added[3];
        int count = 0;
        for (Vertex x : t)
            if (!in_s_[x]) {
                add_vertex(x);
                added[count++] = x;
            }
        dfs();
        while (count > 0) remove_vertex(added[--count]);
    }

    void dfs() {
        if (over_budget()) return;
        const std::size_t limit = bound();
        if (members_.size() > limit) return;

        if (sh_.opts.prune) {
            if (sh_.class_bound && !sh_.class_bound->feasible(class_count_[0], class_count_[1], class_count_[2]))
                return;
            std::vector<Vertex> key = members_;
            std::sort(key.begin(), key.end());
            if (!seen_.insert(std::move(key)).second) return;
        }

        const auto& h = sh_.h;
        // Fail-first: the deficient vertex with the fewest repair edges.
        Vertex pick = 0;
        std::size_t pick_options = SIZE_MAX;
        bool deficient = false;
        for (Vertex x : members_) {
            if (deg_in_[x] >= 2) continue;
            deficient = true;
            std::size_t options = 0;
            for (EdgeId e : h.incident(x))
                if (edge_usable(h.edge(e), limit)) ++options;
            if (options < pick_options) {
                pick_options = options;
                pick = x;
            }
            if (options == 0) return;
        }

        if (!deficient) {
            if (!sh_.opts.exact_size || members_.size() == sh_.k_max) {
                record();
                return;
            }
            // Exact mode: grow a core on fewer vertices by any further edge.
            for (EdgeId e = 0; e < h.num_edges(); ++e) {
                const Triple& t = h.edge(e);
                if (!edge_usable(t, sh_.k_max)) continue;
                expand_with(t);
                if (sh_.exhausted) return;
            }
            return;
        }

        for (EdgeId e : h.incident(pick)) {
            const Triple& t = h.edge(e);
            if (!edge_usable(t, bound())) continue;
            expand_with(t);
            if (sh_.exhausted) return;
        }
    }

    Shared& sh_;
    std::vector<char> in_s_;
    std::vector<std::uint32_t> deg_in_;
    std::vector<Vertex> members_;
    std::array<std::size_t, 3> class_count_{0, 0, 0};
    std::uint32_t root_rank_ = 0;
    std::vector<Vertex> best_;
    std::unordered_set<std::vector<Vertex>, VertexSetHash> seen_;
};

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERCORE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return static_cast<unsigned>(t);
    }
    return 1;
}

}  // namespace

MinCoreResult min_core(const Hypergraph3& h, std::size_t k_max, const MinCoreOptions& opts) {
    if (k_max < 4) throw std::invalid_argument("min_core: k_max must be at least 4");
    MinCoreResult result;
    const std::size_t n = h.num_vertices();
    if (h.num_edges() == 0) return result;

    Shared sh(h, k_max, opts);
    sh.usable.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) sh.usable[v] = h.degree(v) >= 2;

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    sh.rank.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) sh.rank[order[i]] = i;

    if (opts.prune) {
        sh.linear_host = h.is_linear();
        if (sh.linear_host && h.is_tripartite()) {
            std::vector<int> labels;
            for (int c : *h.partition())
                if (std::find(labels.begin(), labels.end(), c) == labels.end()) labels.push_back(c);
            sh.cls.resize(n);
            for (Vertex v = 0; v < n; ++v)
                sh.cls[v] = static_cast<int>(std::find(labels.begin(), labels.end(), (*h.partition())[v]) - labels.begin());
            sh.class_bound.emplace(k_max, opts.exact_size);
        }
    }

    std::vector<Vertex> roots;
    for (Vertex v : order)
        if (sh.usable[v]) roots.push_back(v);

    std::vector<std::vector<Vertex>> per_root(roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        RootSearch search(sh);
        for (std::size_t i = next++; i < roots.size(); i = next++) {
            if (sh.exhausted) break;
            per_root[i] = search.run(roots[i]);
        }
    };
    const unsigned threads = std::min<unsigned>(resolve_threads(opts.threads), std::max<std::size_t>(1, roots.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<Vertex> best;
    for (auto& s : per_root) {
        if (s.empty()) continue;
        if (best.empty() || s.size() < best.size() || (s.size() == best.size() && lex_less(s, best))) best = s;
    }

    result.nodes_expanded = std::min(sh.nodes.load(), opts.budget);
    if (!best.empty()) {
        InducedSubgraph sub = induced(h, best);
        std::vector<Triple> es;
        for (const auto& t : sub.graph.edges()) es.push_back(sub.lift(t));
        result.core = CoreCertificate::from_edges(std::move(es));
    }
    if (sh.exhausted) {
        result.status = SearchStatus::budget_exhausted;
    } else {
        result.status = best.empty() ? SearchStatus::none : SearchStatus::found;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Ordered-pair graph

namespace {

using PairVertex = std::pair<Vertex, Vertex>;

Vertex third_of(const Triple& t, Vertex a, Vertex b) {
    for (Vertex x : t)
        if (x != a && x != b) return x;
    return t[0];
}

// Calls f(neighbor, middle, first_edge, second_edge) for every annotated edge
// at pair-vertex (i, j).
template <typename F>
void for_each_pair_neighbor(const Hypergraph3& h, PairVertex p, F&& f) {
    auto [i, j] = p;
    for (EdgeId e1 : h.incident(i)) {
        const Triple& t1 = h.edge(e1);
        for (Vertex r : t1) {
            if (r == i || r == j) continue;
            Vertex s = third_of(t1, i, r);
            for (EdgeId e2 : h.pair_edges(j, r)) {
                if (e2 == e1) continue;
                Vertex t = third_of(h.edge(e2), j, r);
                f(PairVertex{s, t}, r, e1, e2);
            }
        }
    }
}

PairGraphEdge orient(PairVertex a, PairVertex b, Vertex r, EdgeId e1, EdgeId e2) {
    if (a < b) return {a, b, r, e1, e2};
    return {b, a, r, e1, e2};
}

std::vector<Triple> decode(const Hypergraph3& h, const std::vector<PairGraphEdge>& cycle) {
    std::vector<Triple> es;
    for (const auto& c : cycle) {
        es.push_back(h.edge(c.first));
        es.push_back(h.edge(c.second));
    }
    return es;
}

}  // namespace

PairGraph build_pair_graph(const Hypergraph3& h) {
    PairGraph g;
    g.host_vertices = h.num_vertices();
    const auto n = static_cast<Vertex>(h.num_vertices());
    for (Vertex i = 0; i < n; ++i) {
        if (h.degree(i) == 0) continue;
        for (Vertex j = 0; j < n; ++j) {
            if (h.degree(j) == 0) continue;
            PairVertex from{i, j};
            for_each_pair_neighbor(h, from, [&](PairVertex to, Vertex r, EdgeId e1, EdgeId e2) {
                if (from < to) g.edges.push_back({from, to, r, e1, e2});
            });
        }
    }
    return g;
}

std::optional<CycleCore> cycle_core(const Hypergraph3& h) {
    const auto n = static_cast<Vertex>(h.num_vertices());
    std::optional<CycleCore> best;

    struct Visit {
        std::size_t dist;
        PairVertex parent;
        Vertex middle;  // annotation of the tree edge to the parent
        EdgeId e1, e2;
    };

    auto tree_path = [](const std::unordered_map<std::uint64_t, Visit>& seen, PairVertex v, Vertex n_) {
        std::vector<std::pair<PairVertex, Visit>> path;
        for (;;) {
            const Visit& vis = seen.at(std::uint64_t{v.first} * n_ + v.second);
            path.emplace_back(v, vis);
            if (vis.dist == 0) break;
            v = vis.parent;
        }
        return path;  // v ... root
    };

    for (Vertex i = 0; i < n; ++i) {
        if (h.degree(i) < 2) continue;  // a pair-vertex on a cycle needs two edges at each coordinate
        for (Vertex j = 0; j < n; ++j) {
            if (h.degree(j) < 2) continue;
            if (best && best->cycle_length == 2) return best;
            PairVertex root{i, j};
            std::unordered_map<std::uint64_t, Visit> seen;
            std::deque<PairVertex> queue;
            seen[std::uint64_t{i} * n + j] = {0, root, 0, 0, 0};
            queue.push_back(root);
            while (!queue.empty()) {
                PairVertex u = queue.front();
                queue.pop_front();
                const Visit uv = seen.at(std::uint64_t{u.first} * n + u.second);
                if (best && 2 * uv.dist >= best->cycle_length) break;
                for_each_pair_neighbor(h, u, [&](PairVertex w, Vertex r, EdgeId e1, EdgeId e2) {
                    if (uv.dist > 0 && w == uv.parent && r == uv.middle) return;
                    const std::uint64_t wk = std::uint64_t{w.first} * n + w.second;
                    auto it = seen.find(wk);
                    if (it == seen.end()) {
                        seen.emplace(wk, Visit{uv.dist + 1, u, r, e1, e2});
                        queue.push_back(w);
                        return;
                    }
                    // Non-tree edge u -- w closes a cycle through the lowest common ancestor.
                    auto pu = tree_path(seen, u, n);
                    auto pw = tree_path(seen, w, n);
                    while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2].first == pw[pw.size() - 2].first &&
                           pu[pu.size() - 2].second.middle == pw[pw.size() - 2].second.middle) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    std::vector<PairGraphEdge> cycle;
                    for (std::size_t k = 0; k + 1 < pu.size(); ++k)
                        cycle.push_back(orient(pu[k].first, pu[k].second.parent, pu[k].second.middle, pu[k].second.e1,
                                               pu[k].second.e2));
                    for (std::size_t k = 0; k + 1 < pw.size(); ++k)
                        cycle.push_back(orient(pw[k].first, pw[k].second.parent, pw[k].second.middle, pw[k].second.e1,
                                               pw[k].second.e2));
                    cycle.push_back(orient(u, w, r, e1, e2));
                    if (best && cycle.size() >= best->cycle_length) return;
                    auto es = decode(h, cycle);
                    if (!min_degree_two(es)) return;
                    CycleCore found{CoreCertificate::from_edges(std::move(es)), cycle.size(), std::move(cycle)};
                    best = std::move(found);
                });
            }
        }
    }
    return best;
}

}  // namespace hypercore
