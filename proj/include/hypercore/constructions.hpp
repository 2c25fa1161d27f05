#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

/// A finite group given by its full multiplication table.
class Group {
public:
    /// Validates closure, identity, inverses (Latin square) and associativity.
    /// Associativity is checked on all triples for order <= 64 and on a seeded
    /// sample of 20000 triples above that. Throws std::invalid_argument.
    static Group from_table(std::size_t order, std::vector<std::uint32_t> table);

    static Group cyclic(std::size_t m);
    /// Dihedral group of order 2n: element r^i s^f is encoded as i + n*f.
    static Group dihedral(std::size_t n);
    /// Symmetric group on 3 letters (order 6).
    static Group symmetric3();

    std::size_t order() const { return order_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
    bool is_abelian() const;

private:
    std::size_t order_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
};

/// Triples {a, b, a*b} over a group; vertex a of class A is a, b of class B is
/// m + b, c of class C is 2m + c.
struct GroupTripleSystem {
    Group group;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // S, in input order
    Hypergraph3 host;
};

/// Tripartite hypergraph on 3p vertices with edges {a, p+b, 2p+(a+b mod p)}.
/// Requires p prime and p >= 5.
Hypergraph3 modular_construction(std::uint32_t p);

/// Throws on out-of-range or repeated pairs.
GroupTripleSystem group_system(const Group& group, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

/// Every pair of the group.
std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs(const Group& group);

/// Ordered quadruples (a,b,c,d) with (a,b),(a,c),(d,c),(d,b) in S,
/// a*b == d*c, a != d and b != c.
std::uint64_t count_74_quadruples(const GroupTripleSystem& g);

/// m distinct uniform transversal triples over classes of size q.
/// Vertices of class c are c*q .. c*q+q-1.
Hypergraph3 random_tripartite(std::size_t q, std::size_t m, std::uint64_t seed);

/// m distinct uniform triples of {0..n-1}.
Hypergraph3 random_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random transversal triples added one at a time, skipping any that would
/// repeat a covered pair. Throws if m edges cannot be placed.
Hypergraph3 random_linear_tripartite(std::size_t q, std::size_t m, std::uint64_t seed);

struct AvoidResult {
    Hypergraph3 graph;
    bool reached_target = false;
    std::size_t attempts = 0;
    std::size_t rejected = 0;
    /// A final exhaustive find_config over the whole output returned none.
    bool certified = false;
};

/// Add-and-delete generator for hypergraphs with no k vertices spanning l
/// edges. Each random candidate edge is kept only if no (k, l) configuration
/// through it exists. Stops at target_m or after max_attempts candidates
/// (0 = 200 * target_m + 1000). The result is then checked as a whole.
AvoidResult avoid_config_generator(std::size_t n, std::size_t k, std::size_t l, std::size_t target_m,
                                   std::uint64_t seed, std::size_t max_attempts = 0);

bool is_prime(std::uint64_t p);

}  // namespace hypercore
