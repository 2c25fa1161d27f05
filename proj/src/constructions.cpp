#include "hypercore/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hypercore/configs.hpp"

namespace hypercore {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Group Group::from_table(std::size_t order, std::vector<std::uint32_t> table) {
    if (order == 0) throw std::invalid_argument("group: empty");
    if (table.size() != order * order) throw std::invalid_argument("group: table is not order x order");
    for (auto x : table)
        if (x >= order) throw std::invalid_argument("group: entry out of range");

    Group g;
    g.order_ = order;
    g.table_ = std::move(table);

    // Latin square: every row and column is a permutation.
    std::vector<char> seen(order);
    for (std::size_t a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < order; ++b) {
            if (seen[g.mul(a, b)]++) throw std::invalid_argument("group: row " + std::to_string(a) + " repeats");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < order; ++b) {
            if (seen[g.mul(b, a)]++) throw std::invalid_argument("group: column " + std::to_string(a) + " repeats");
        }
    }

    bool found = false;
    for (std::uint32_t e = 0; e < order && !found; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
        if (ok) {
            g.identity_ = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("group: no identity element");

    g.inverse_.resize(order);
    for (std::uint32_t a = 0; a < order; ++a) {
        for (std::uint32_t b = 0; b < order; ++b) {
            if (g.mul(a, b) == g.identity_) {
                if (g.mul(b, a) != g.identity_) throw std::invalid_argument("group: one-sided inverse");
                g.inverse_[a] = b;
                break;
            }
        }
    }

    auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::invalid_argument("group: not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                        "," + std::to_string(c) + ")");
    };
    if (order <= 64) {
        for (std::uint32_t a = 0; a < order; ++a)
            for (std::uint32_t b = 0; b < order; ++b)
                for (std::uint32_t c = 0; c < order; ++c) assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order - 1));
        for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
    }
    return g;
}

Group Group::cyclic(std::size_t m) {
    std::vector<std::uint32_t> t(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<std::uint32_t>((a + b) % m);
    return from_table(m, std::move(t));
}

Group Group::dihedral(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dihedral: n must be positive");
    const std::size_t m = 2 * n;
    std::vector<std::uint32_t> t(m * m);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t i = x % n, f = x / n, j = y % n, g = y / n;
            std::size_t rot = f ? (i + n - j) % n : (i + j) % n;
            t[x * m + y] = static_cast<std::uint32_t>(rot + n * ((f + g) % 2));
        }
    }
    return from_table(m, std::move(t));
}

Group Group::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::uint32_t> t(36);
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
            t[a * 6 + b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return from_table(6, std::move(t));
}

bool Group::is_abelian() const {
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

Hypergraph3 modular_construction(std::uint32_t p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("modular construction needs a prime p >= 5, got " + std::to_string(p));
    std::vector<Triple> edges;
    edges.reserve(std::size_t{p} * p);
    for (Vertex a = 0; a < p; ++a)
        for (Vertex b = 0; b < p; ++b) edges.push_back({a, p + b, 2 * p + (a + b) % p});
    std::vector<int> part(3 * std::size_t{p});
    for (std::size_t v = 0; v < part.size(); ++v) part[v] = static_cast<int>(v / p);
    return Hypergraph3::build(3 * std::size_t{p}, std::move(edges), std::move(part));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs(const Group& group) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> s;
    s.reserve(group.order() * group.order());
    for (std::uint32_t a = 0; a < group.order(); ++a)
        for (std::uint32_t b = 0; b < group.order(); ++b) s.emplace_back(a, b);
    return s;
}

GroupTripleSystem group_system(const Group& group, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    const auto m = static_cast<Vertex>(group.order());
    std::vector<char> used(std::size_t{m} * m, 0);
    std::vector<Triple> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a >= m || b >= m) throw std::invalid_argument("group system: pair out of range");
        if (used[std::size_t{a} * m + b]++) throw std::invalid_argument("group system: repeated pair");
        edges.push_back({a, m + b, 2 * m + group.mul(a, b)});
    }
    std::vector<int> part(3 * std::size_t{m});
    for (std::size_t v = 0; v < part.size(); ++v) part[v] = static_cast<int>(v / m);
    GroupTripleSystem g{group, std::move(pairs), {}};
    g.host = Hypergraph3::build(3 * std::size_t{m}, std::move(edges), std::move(part));
    return g;
}

std::uint64_t count_74_quadruples(const GroupTripleSystem& g) {
    const std::size_t m = g.group.order();
    std::vector<char> in_s(m * m, 0);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_product(m);
    for (auto [a, b] : g.pairs) {
        in_s[a * m + b] = 1;
        by_product[g.group.mul(a, b)].emplace_back(a, b);
    }
    // Within one product bucket a != d forces b != c by cancellation.
    std::uint64_t count = 0;
    for (const auto& bucket : by_product) {
        for (auto [a, b] : bucket) {
            for (auto [d, c] : bucket) {
                if (a == d) continue;
                if (in_s[a * m + c] && in_s[d * m + b]) ++count;
            }
        }
    }
    return count;
}

namespace {

// Floyd's algorithm: m distinct values from [0, universe), in draw order.
std::vector<std::uint64_t> sample_distinct(std::uint64_t universe, std::size_t m, std::mt19937_64& rng) {
    std::vector<std::uint64_t> out;
    out.reserve(m);
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(m * 2);
    for (std::uint64_t j = universe - m; j < universe; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        std::uint64_t v = taken.count(t) ? j : t;
        taken.insert(v);
        out.push_back(v);
    }
    return out;
}

std::vector<int> class_labels(std::size_t q) {
    std::vector<int> part(3 * q);
    for (std::size_t v = 0; v < part.size(); ++v) part[v] = static_cast<int>(v / q);
    return part;
}

}  // namespace

Hypergraph3 random_tripartite(std::size_t q, std::size_t m, std::uint64_t seed) {
    const std::uint64_t universe = std::uint64_t{q} * q * q;
    if (m > universe)
        throw std::invalid_argument("random_tripartite: " + std::to_string(m) + " edges exceed " + std::to_string(universe));
    std::mt19937_64 rng(seed);
    std::vector<Triple> edges;
    edges.reserve(m);
    for (std::uint64_t x : sample_distinct(universe, m, rng)) {
        auto a = static_cast<Vertex>(x / (q * q));
        auto b = static_cast<Vertex>((x / q) % q);
        auto c = static_cast<Vertex>(x % q);
        edges.push_back({a, static_cast<Vertex>(q + b), static_cast<Vertex>(2 * q + c)});
    }
    return Hypergraph3::build(3 * q, std::move(edges), class_labels(q));
}

Hypergraph3 random_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t total = n < 3 ? 0 : std::uint64_t{n} * (n - 1) * (n - 2) / 6;
    if (m > total) throw std::invalid_argument("random_uniform: " + std::to_string(m) + " edges exceed C(n,3)");
    std::mt19937_64 rng(seed);
    std::vector<Triple> edges;
    edges.reserve(m);
    if (2 * m <= total) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        std::unordered_set<std::uint64_t> seen;
        while (edges.size() < m) {
            Vertex a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || a == c || b == c) continue;
            Triple t = make_triple(a, b, c);
            std::uint64_t key = (std::uint64_t{t[0]} << 42) | (std::uint64_t{t[1]} << 21) | t[2];
            if (seen.insert(key).second) edges.push_back(t);
        }
    } else {
        std::vector<Triple> all;
        all.reserve(total);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) all.push_back({a, b, c});
        std::shuffle(all.begin(), all.end(), rng);
        edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    }
    return Hypergraph3::build(n, std::move(edges));
}

Hypergraph3 random_linear_tripartite(std::size_t q, std::size_t m, std::uint64_t seed) {
    if (m > q * q) throw std::invalid_argument("random_linear_tripartite: more than q^2 edges cannot be linear");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(q - 1));
    std::unordered_set<std::uint64_t> covered;
    std::vector<Triple> edges;
    const std::size_t max_attempts = 1000 * m + 10000;
    for (std::size_t attempt = 0; edges.size() < m; ++attempt) {
        if (attempt == max_attempts)
            throw std::runtime_error("random_linear_tripartite: could not place " + std::to_string(m) + " edges");
        Triple t{pick(rng), static_cast<Vertex>(q + pick(rng)), static_cast<Vertex>(2 * q + pick(rng))};
        const std::uint64_t k01 = pair_key(t[0], t[1]), k02 = pair_key(t[0], t[2]), k12 = pair_key(t[1], t[2]);
        if (covered.count(k01) || covered.count(k02) || covered.count(k12)) continue;
        covered.insert(k01);
        covered.insert(k02);
        covered.insert(k12);
        edges.push_back(t);
    }
    return Hypergraph3::build(3 * q, std::move(edges), class_labels(q));
}

AvoidResult avoid_config_generator(std::size_t n, std::size_t k, std::size_t l, std::size_t target_m,
                                   std::uint64_t seed, std::size_t max_attempts) {
    if (n < 3 && target_m > 0) throw std::invalid_argument("avoid_config_generator: need n >= 3");
    if (max_attempts == 0) max_attempts = 200 * target_m + 1000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n == 0 ? 0 : n - 1));

    AvoidResult res;
    std::vector<Triple> edges;
    std::unordered_set<std::uint64_t> present;
    while (edges.size() < target_m && res.attempts < max_attempts) {
        Vertex a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || a == c || b == c) continue;
        ++res.attempts;
        Triple t = make_triple(a, b, c);
        std::uint64_t key = (std::uint64_t{t[0]} << 42) | (std::uint64_t{t[1]} << 21) | t[2];
        if (present.count(key)) continue;
        edges.push_back(t);
        Hypergraph3 trial = Hypergraph3::build(n, edges);
        // A configuration that appears now must use the new edge.
        auto local = find_config_through(trial, t, k, l);
        if (local.status != SearchStatus::none) {
            edges.pop_back();
            ++res.rejected;
            continue;
        }
        present.insert(key);
    }
    res.graph = Hypergraph3::build(n, std::move(edges));
    res.reached_target = res.graph.num_edges() == target_m;
    res.certified = res.graph.num_edges() == 0 || find_config(res.graph, k, l).status == SearchStatus::none;
    return res;
}

}  // namespace hypercore
