#pragma once

#include <cstdint>
#include <vector>

namespace tcg {

class CoprimeGraph;

/// Plain adjacency-matrix graph for the exhaustive subdivision searches.
/// Vertices are 0-based here; only meant for small orders.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint8_t> adj; // n*n, symmetric, zero diagonal

    explicit SmallGraph(int order) : n(order), adj(std::size_t(order) * order, 0) {}
    static SmallGraph from(const CoprimeGraph& g);

    void add_edge(int u, int v) {
        adj[std::size_t(u) * n + v] = 1;
        adj[std::size_t(v) * n + u] = 1;
    }
    bool adjacent(int u, int v) const { return adj[std::size_t(u) * n + v] != 0; }
    int edge_count() const;
};

/// Exhaustive search for a K5 subdivision (5 branch vertices joined by 10
/// internally disjoint paths). Exponential; intended for n <= ~10.
bool has_k5_subdivision(const SmallGraph& g);

/// Exhaustive search for a K3,3 subdivision (3+3 branch vertices, 9 paths).
bool has_k33_subdivision(const SmallGraph& g);

} // namespace tcg
