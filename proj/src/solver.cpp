#include "dcl/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "dcl/error.hpp"

namespace dcl {

namespace {

using u64 = std::uint64_t;

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// radical[x] = product of the distinct primes dividing x (radical[1] = 1).
std::vector<u64> radical_table(u64 k) {
    std::vector<u64> rad(k + 1, 1);
    std::vector<bool> composite(k + 1, false);
    for (u64 p = 2; p <= k; ++p) {
        if (composite[p]) continue;
        for (u64 m = p; m <= k; m += p) {
            rad[m] *= p;
            if (m > p) composite[m] = true;
        }
    }
    return rad;
}

struct Search {
    const Graph &g;
    u64 k;
    const SolveLimits &limits;
    std::vector<VertexId> order{};   // assignment order
    std::vector<u64> assigned{};     // label per vertex, 0 = unassigned
    std::vector<bool> used{};        // label usage
    std::vector<u64> radical{};
    u64 nodes = 0;
    bool timed_out = false;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    bool budget_exceeded() {
        if (nodes >= limits.max_nodes) return true;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    bool feasible_label(VertexId v, u64 x) const {
        for (VertexId w : g.neighbors(v)) {
            u64 y = assigned[w];
            if (y != 0 && gcd_u64(x, y) != 1) return false;
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        VertexId v = order[depth];
        std::set<u64> failed_radicals;
        for (u64 x = 1; x <= k; ++x) {
            if (used[x]) continue;
            if (failed_radicals.count(radical[x])) continue;
            if (!feasible_label(v, x)) {
                failed_radicals.insert(radical[x]);
                continue;
            }
            ++nodes;
            if (budget_exceeded()) {
                timed_out = true;
                return false;
            }
            assigned[v] = x;
            used[x] = true;
            if (dfs(depth + 1)) return true;
            assigned[v] = 0;
            used[x] = false;
            if (timed_out) return false;
            failed_radicals.insert(radical[x]);
        }
        return false;
    }
};

} // namespace

SolveResult solve_coprime_labeling(const Graph &g, u64 k, const SolveLimits &limits) {
    if (k < g.vertex_count())
        fail(errc::invalid_parameter, "label budget k=" + std::to_string(k) +
                                          " is below the vertex count " +
                                          std::to_string(g.vertex_count()));
    Search search{g, k, limits};
    search.order.resize(g.vertex_count());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    search.assigned.assign(g.vertex_count(), 0);
    search.used.assign(std::size_t(k) + 1, false);
    search.radical = radical_table(k);
    if (limits.time_limit) {
        search.deadline = std::chrono::steady_clock::now() + *limits.time_limit;
        search.has_deadline = true;
    }

    SolveResult result;
    result.budget_k = k;
    bool found = search.dfs(0);
    result.nodes_explored = search.nodes;
    if (found) {
        result.status = SolveStatus::feasible;
        Labeling f;
        f.values.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            f.values.push_back(from_u64(search.assigned[v]));
        result.labeling = std::move(f);
    } else if (search.timed_out) {
        result.status = SolveStatus::timeout;
    } else {
        result.status = SolveStatus::infeasible;
    }
    return result;
}

} // namespace dcl
