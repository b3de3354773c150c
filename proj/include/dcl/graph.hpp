#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dcl {

using VertexId = std::uint32_t;

// Unordered vertex pair, stored with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

enum class Family { path, cycle, wheel, hypercube, complete };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string &name);

// Finite simple undirected graph. Immutable after construction: labelings and
// run frames reference the same graph across time steps.
class Graph {
  public:
    // Validates, deduplicates, and normalizes the edge list. Rejects
    // self-loops and out-of-range endpoints.
    static Graph from_edge_list(VertexId vertex_count,
                                const std::vector<std::pair<VertexId, VertexId>> &edges);

    VertexId vertex_count() const { return vertex_count_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<VertexId> &neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  private:
    Graph(VertexId vertex_count, std::vector<Edge> sorted_edges);

    VertexId vertex_count_;
    std::vector<Edge> edges_; // sorted, unique, a < b
    std::vector<std::vector<VertexId>> adjacency_;
};

// Named graph families with known dynamic coprime labelings (complete
// graphs are solver test fodder). Wheel W_n: hub is vertex 0, rim is 1..n. Hypercube Q_n:
// vertex id is the integer encoding of the coordinate vector.
Graph build_family(Family family, std::uint32_t n);

struct Bipartition {
    std::vector<VertexId> part0; // holds the smallest vertex id of each component
    std::vector<VertexId> part1;
};

// BFS 2-coloring per connected component. Returns nullopt exactly when the
// graph contains an odd cycle.
std::optional<Bipartition> bipartition_of(const Graph &g);

// Witness extraction for the not-bipartite case: vertices of some odd cycle,
// in cycle order. Empty when the graph is bipartite.
std::vector<VertexId> find_odd_cycle(const Graph &g);

} // namespace dcl
