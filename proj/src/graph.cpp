#include "dcl/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "dcl/error.hpp"

namespace dcl {

std::string family_name(Family f) {
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::wheel: return "wheel";
    case Family::hypercube: return "hypercube";
    case Family::complete: return "complete";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string &name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "wheel") return Family::wheel;
    if (name == "hypercube") return Family::hypercube;
    if (name == "complete") return Family::complete;
    return std::nullopt;
}

Graph::Graph(VertexId vertex_count, std::vector<Edge> sorted_edges)
    : vertex_count_(vertex_count), edges_(std::move(sorted_edges)), adjacency_(vertex_count) {
    for (const Edge &e : edges_) {
        adjacency_[e.a].push_back(e.b);
        adjacency_[e.b].push_back(e.a);
    }
    for (auto &nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_edge_list(VertexId vertex_count,
                            const std::vector<std::pair<VertexId, VertexId>> &edges) {
    if (vertex_count == 0)
        fail(errc::invalid_parameter, "graph requires vertex_count >= 1");
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto &[u, v] : edges) {
        if (u == v)
            fail(errc::invalid_parameter,
                 "self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not allowed in a simple graph");
        if (u >= vertex_count || v >= vertex_count)
            fail(errc::invalid_parameter,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") references a vertex id >= " + std::to_string(vertex_count));
        normalized.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    return Graph(vertex_count, std::move(normalized));
}

Graph build_family(Family family, std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    switch (family) {
    case Family::path: {
        if (n < 1) fail(errc::invalid_parameter, "path requires n >= 1");
        for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph::from_edge_list(n, edges);
    }
    case Family::cycle: {
        if (n < 3) fail(errc::invalid_parameter, "cycle requires n >= 3");
        for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, 0);
        return Graph::from_edge_list(n, edges);
    }
    case Family::wheel: {
        // W_n: hub 0 joined to every rim vertex 1..n, plus the rim cycle.
        if (n < 3) fail(errc::invalid_parameter, "wheel requires n >= 3");
        for (VertexId i = 1; i <= n; ++i) edges.emplace_back(0, i);
        for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n, 1);
        return Graph::from_edge_list(n + 1, edges);
    }
    case Family::hypercube: {
        if (n < 1) fail(errc::invalid_parameter, "hypercube requires n >= 1");
        if (n > 24) fail(errc::invalid_parameter, "hypercube dimension capped at 24");
        VertexId count = VertexId(1) << n;
        for (VertexId v = 0; v < count; ++v)
            for (std::uint32_t bit = 0; bit < n; ++bit) {
                VertexId w = v ^ (VertexId(1) << bit);
                if (v < w) edges.emplace_back(v, w);
            }
        return Graph::from_edge_list(count, edges);
    }
    case Family::complete: {
        if (n < 1) fail(errc::invalid_parameter, "complete requires n >= 1");
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph::from_edge_list(n, edges);
    }
    }
    fail(errc::invalid_parameter, "unknown family");
}

namespace {

// Shared BFS 2-coloring. Returns colors, or the first conflicting edge.
struct TwoColoring {
    std::vector<int> color;            // -1 unvisited
    std::vector<VertexId> parent;      // BFS tree parent
    std::optional<Edge> conflict;      // same-color edge, if any
};

TwoColoring two_color(const Graph &g) {
    TwoColoring r;
    r.color.assign(g.vertex_count(), -1);
    r.parent.assign(g.vertex_count(), 0);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (r.color[root] != -1) continue;
        r.color[root] = 0; // canonicalization: smallest id of each component is in part0
        r.parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId v : g.neighbors(u)) {
                if (r.color[v] == -1) {
                    r.color[v] = 1 - r.color[u];
                    r.parent[v] = u;
                    queue.push_back(v);
                } else if (r.color[v] == r.color[u]) {
                    r.conflict = u < v ? Edge{u, v} : Edge{v, u};
                    return r;
                }
            }
        }
    }
    return r;
}

} // namespace

std::optional<Bipartition> bipartition_of(const Graph &g) {
    TwoColoring tc = two_color(g);
    if (tc.conflict) return std::nullopt;
    Bipartition b;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        (tc.color[v] == 0 ? b.part0 : b.part1).push_back(v);
    return b;
}

std::vector<VertexId> find_odd_cycle(const Graph &g) {
    TwoColoring tc = two_color(g);
    if (!tc.conflict) return {};
    // Walk both endpoints of the conflicting edge up to their lowest common
    // ancestor in the BFS tree; the two paths plus the edge form an odd cycle.
    VertexId u = tc.conflict->a, v = tc.conflict->b;
    std::vector<VertexId> up, vp;
    for (VertexId x = u;; x = tc.parent[x]) {
        up.push_back(x);
        if (tc.parent[x] == x) break;
    }
    for (VertexId x = v;; x = tc.parent[x]) {
        vp.push_back(x);
        if (tc.parent[x] == x) break;
    }
    // Trim the common tail above the LCA, leaving both paths ending at it.
    while (up.size() >= 2 && vp.size() >= 2 && up[up.size() - 1] == vp[vp.size() - 1] &&
           up[up.size() - 2] == vp[vp.size() - 2]) {
        up.pop_back();
        vp.pop_back();
    }
    // u ... lca ... v in cycle order; the conflicting edge (v,u) closes it.
    std::vector<VertexId> out(up.begin(), up.end());
    for (auto it = vp.rbegin() + 1; it != vp.rend(); ++it) out.push_back(*it);
    return out;
}

} // namespace dcl
