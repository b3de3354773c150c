#include "dcl/labeling.hpp"

#include <algorithm>
#include <map>

#include "dcl/error.hpp"
#include "dcl/sieve.hpp"

namespace dcl {

VerifyReport verify_coprime(const Graph &g, const Labeling &f) {
    if (f.size() != g.vertex_count())
        fail(errc::invalid_parameter, "labeling covers " + std::to_string(f.size()) +
                                          " vertices but the graph has " +
                                          std::to_string(g.vertex_count()));
    for (VertexId v = 0; v < f.size(); ++v)
        if (sgn(f[v]) <= 0)
            fail(errc::invalid_parameter,
                 "label of vertex " + std::to_string(v) + " must be a positive integer");
    VerifyReport report;
    std::map<Int, VertexId> first_seen;
    for (VertexId v = 0; v < f.size(); ++v) {
        auto [it, inserted] = first_seen.emplace(f[v], v);
        if (!inserted && report.injective) {
            report.injective = false;
            report.duplicate = {it->second, v};
        }
    }
    for (const Edge &e : g.edges()) {
        Int d = gcd(f[e.a], f[e.b]);
        if (d > 1) report.violations.emplace_back(e, d);
    }
    report.ok = report.injective && report.violations.empty();
    return report;
}

bool verify_prime_labeling(const Graph &g, const Labeling &f) {
    if (f.size() != g.vertex_count()) return false;
    std::vector<bool> hit(g.vertex_count(), false);
    for (VertexId v = 0; v < f.size(); ++v) {
        const Int &x = f[v];
        if (x < 1 || x > from_u64(g.vertex_count())) return false;
        std::size_t idx = std::size_t(to_u64(x)) - 1;
        if (hit[idx]) return false;
        hit[idx] = true;
    }
    return verify_coprime(g, f).ok;
}

Labeling canonical_initial_labeling(Family family, std::uint32_t n, const Config &cfg) {
    switch (family) {
    case Family::path:
    case Family::cycle: {
        Graph g = build_family(family, n); // validates n
        Labeling f;
        for (VertexId v = 0; v < g.vertex_count(); ++v) f.values.push_back(from_u64(v + 1));
        return f;
    }
    case Family::wheel: {
        Graph g = build_family(family, n);
        Labeling f;
        f.values.push_back(1); // hub
        for (std::uint32_t i = 1; i <= n; ++i) f.values.push_back(from_u64(nth_prime(i, cfg)));
        return f;
    }
    case Family::hypercube: {
        Graph g = build_family(family, n);
        auto parts = bipartition_of(g);
        // Q_n is bipartite by construction; part0 is the even-weight class
        // (it contains vertex 0). First block of primes to part0, next block
        // to part1, ascending vertex id within each part.
        Labeling f;
        f.values.assign(g.vertex_count(), Int(0));
        std::uint64_t next = 1;
        for (VertexId v : parts->part0) f.values[v] = from_u64(nth_prime(next++, cfg));
        for (VertexId v : parts->part1) f.values[v] = from_u64(nth_prime(next++, cfg));
        return f;
    }
    case Family::complete:
        fail(errc::invalid_parameter,
             "complete graphs have no canonical labeling; use the solver (k >= n+1)");
    }
    fail(errc::invalid_parameter, "unknown family");
}

std::optional<std::string> family_scope_note(Family family, std::uint32_t n) {
    if (family == Family::cycle && n % 2 == 0)
        return "valid though outside the odd-cycle theorem's stated scope";
    return std::nullopt;
}

Labeling bipartite_prime_labeling(const Graph &g, const Config &cfg) {
    auto parts = bipartition_of(g);
    if (!parts) {
        auto cycle = find_odd_cycle(g);
        std::string witness;
        for (VertexId v : cycle) witness += (witness.empty() ? "" : ",") + std::to_string(v);
        fail(errc::not_bipartite, "graph is not bipartite; odd cycle: " + witness);
    }
    Labeling f;
    f.values.assign(g.vertex_count(), Int(0));
    std::uint64_t idx0 = 1, idx1 = 2; // odd-indexed vs even-indexed primes
    for (VertexId v : parts->part0) {
        f.values[v] = from_u64(nth_prime(idx0, cfg));
        idx0 += 2;
    }
    for (VertexId v : parts->part1) {
        f.values[v] = from_u64(nth_prime(idx1, cfg));
        idx1 += 2;
    }
    return f;
}

} // namespace dcl
