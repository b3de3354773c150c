#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcl/bigint.hpp"
#include "dcl/config.hpp"
#include "dcl/graph.hpp"

namespace dcl {

// Injective assignment of positive integers to every vertex, stored dense by
// vertex id. Values are exact big integers.
struct Labeling {
    std::vector<Int> values;

    const Int &operator[](VertexId v) const { return values[v]; }
    VertexId size() const { return VertexId(values.size()); }
};

struct VerifyReport {
    bool ok = false;
    bool injective = true;
    std::optional<std::pair<VertexId, VertexId>> duplicate; // first equal-label pair
    std::vector<std::pair<Edge, Int>> violations;           // every edge with gcd > 1
};

// Checks injectivity and the gcd of every edge. Lists all violations, not
// just the first. Raises a parameter error if f is not total on V(g).
VerifyReport verify_coprime(const Graph &g, const Labeling &f);

// True iff f is a bijection onto {1..|V|} and verify_coprime passes.
bool verify_prime_labeling(const Graph &g, const Labeling &f);

// Canonical initial labelings per family:
// path/cycle get 1..n, wheel gets hub 1 and rim p_1..p_n, and the hypercube
// assigns the first 2^(n-1) primes to the even-weight part and the next
// 2^(n-1) to the odd-weight part, each in ascending vertex-id order (the Q_3
// golden assignment). Complete graphs have no canonical labeling; use the
// solver instead.
Labeling canonical_initial_labeling(Family family, std::uint32_t n,
                                    const Config &cfg = Config::defaults());

// Advisory note attached to canonical labelings that are valid but rest
// on more than the family's standard argument (even cycles: the closing
// edge gcd(n,1)=1 works for every n, the usual statement assumes odd n).
std::optional<std::string> family_scope_note(Family family, std::uint32_t n);

// Disjoint prime labeling for an arbitrary bipartite graph: part0 vertices
// get the odd-indexed primes p_1, p_3, ..., part1 the even-indexed ones,
// each in ascending vertex-id order. Throws not_bipartite (with an odd-cycle
// witness in the message) otherwise.
Labeling bipartite_prime_labeling(const Graph &g, const Config &cfg = Config::defaults());

} // namespace dcl
