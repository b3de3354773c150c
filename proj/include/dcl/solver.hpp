#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "dcl/config.hpp"
#include "dcl/graph.hpp"
#include "dcl/labeling.hpp"

namespace dcl {

struct SolveLimits {
    std::uint64_t max_nodes = 50'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SolveStatus { feasible, infeasible, timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    std::optional<Labeling> labeling; // present iff feasible; re-verifies
    std::uint64_t nodes_explored = 0;
    std::uint64_t budget_k = 0;
};

// Backtracking search for a coprime labeling with labels drawn from {1..k}
// (k is the maximum label value, k >= |V|). Vertices are assigned in
// (degree desc, id asc) order, labels ascending; candidate labels must be
// coprime to every labeled neighbor. Labels with identical prime signatures
// (radicals) are interchangeable within a search level, so once one fails the
// rest of its class is pruned. `infeasible` is an exhaustive proof;
// `timeout` is reported when a budget runs out first.
SolveResult solve_coprime_labeling(const Graph &g, std::uint64_t k, const SolveLimits &limits = {});

} // namespace dcl
