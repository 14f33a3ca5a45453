#include "tcg/graph.hpp"

#include <bit>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tcg {

CoprimeGraph::CoprimeGraph(std::uint32_t n)
    : n_(n), words_((n + 64) / 64), bits_(std::size_t(n + 1) * words_, 0) {}

void CoprimeGraph::set_edge(std::uint32_t u, std::uint32_t v) {
    bits_[std::size_t(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[std::size_t(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

CoprimeGraph CoprimeGraph::build(std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("CoprimeGraph::build: n must be >= 1");
    CoprimeGraph g(n);
    std::uint64_t* bits = g.bits_.data();
    const std::uint32_t words = g.words_;
#pragma omp parallel for schedule(dynamic, 16) if (n >= 256)
    for (std::int64_t i = 1; i <= n; ++i) {
        std::uint64_t* row = bits + i * words;
        for (std::uint32_t j = 1; j <= n; ++j)
            if (j != std::uint32_t(i) && gcd(i, j) == 1)
                row[j >> 6] |= 1ull << (j & 63);
    }
    return g;
}

CoprimeGraph CoprimeGraph::build_serial(std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("CoprimeGraph::build_serial: n must be >= 1");
    CoprimeGraph g(n);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (gcd(i, j) == 1)
                g.set_edge(i, j);
    return g;
}

std::uint32_t CoprimeGraph::degree(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (std::uint64_t w : row(v))
        d += std::popcount(w);
    return d;
}

std::uint64_t CoprimeGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint32_t v = 1; v <= n_; ++v)
        twice += degree(v);
    return twice / 2;
}

std::vector<std::uint32_t> CoprimeGraph::neighbors(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    auto r = row(v);
    for (std::uint32_t w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            out.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

namespace {

// BFS distances from src over the whole graph; -1 = unreachable.
std::vector<int> bfs_distances(const CoprimeGraph& g, std::uint32_t src) {
    const std::uint32_t n = g.order();
    const std::uint32_t words = g.words();
    std::vector<int> dist(n + 1, -1);
    std::vector<std::uint64_t> frontier(words, 0), visited(words, 0);
    frontier[src >> 6] |= 1ull << (src & 63);
    visited = frontier;
    dist[src] = 0;
    int level = 0;
    while (true) {
        std::vector<std::uint64_t> next(words, 0);
        for (std::uint32_t w = 0; w < words; ++w) {
            std::uint64_t word = frontier[w];
            while (word) {
                std::uint32_t v = w * 64 + std::countr_zero(word);
                word &= word - 1;
                auto r = g.row(v);
                for (std::uint32_t k = 0; k < words; ++k)
                    next[k] |= r[k];
            }
        }
        bool any = false;
        ++level;
        for (std::uint32_t k = 0; k < words; ++k) {
            next[k] &= ~visited[k];
            visited[k] |= next[k];
            std::uint64_t word = next[k];
            while (word) {
                std::uint32_t v = k * 64 + std::countr_zero(word);
                word &= word - 1;
                dist[v] = level;
                any = true;
            }
        }
        if (!any)
            break;
        frontier.swap(next);
    }
    return dist;
}

bool rows_intersect(const CoprimeGraph& g, std::uint32_t u, std::uint32_t v) {
    auto ru = g.row(u), rv = g.row(v);
    for (std::uint32_t w = 0; w < g.words(); ++w)
        if (ru[w] & rv[w])
            return true;
    return false;
}

std::uint32_t first_common_neighbor(const CoprimeGraph& g, std::uint32_t u, std::uint32_t v) {
    auto ru = g.row(u), rv = g.row(v);
    for (std::uint32_t w = 0; w < g.words(); ++w) {
        std::uint64_t both = ru[w] & rv[w];
        if (both)
            return w * 64 + std::countr_zero(both);
    }
    return 0;
}

} // namespace

std::optional<int> diameter(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n == 1)
        return 0;
    constexpr int kUnreachable = std::numeric_limits<int>::max();
    int worst = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst) if (n >= 256)
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = std::uint32_t(i) + 1; j <= n; ++j) {
            int d;
            if (g.adjacent(i, j))
                d = 1;
            else if (rows_intersect(g, i, j))
                d = 2;
            else {
                int bd = bfs_distances(g, i)[j]; // rare: distance > 2 or unreachable
                d = bd < 0 ? kUnreachable : bd;
            }
            worst = std::max(worst, d);
            if (worst == kUnreachable)
                break;
        }
    }
    if (worst == kUnreachable)
        return std::nullopt;
    return worst;
}

std::optional<int> diameter_bfs_serial(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n == 1)
        return 0;
    int worst = 0;
    for (std::uint32_t s = 1; s <= n; ++s) {
        auto dist = bfs_distances(g, s);
        for (std::uint32_t v = 1; v <= n; ++v) {
            if (dist[v] < 0)
                return std::nullopt;
            worst = std::max(worst, dist[v]);
        }
    }
    return worst;
}

std::optional<int> girth(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    // A triangle is the shortest possible cycle; scan edges for a common neighbor.
    for (std::uint32_t u = 1; u <= n; ++u)
        for (std::uint32_t v : g.neighbors(u)) {
            if (v <= u)
                continue;
            if (rows_intersect(g, u, v))
                return 3;
        }
    // Triangle-free: per-source BFS, shortest cycle through non-tree edges.
    int best = -1;
    for (std::uint32_t s = 1; s <= n; ++s) {
        std::vector<int> dist(n + 1, -1), parent(n + 1, 0);
        std::queue<std::uint32_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != std::uint32_t(parent[u])) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

BipartiteResult is_bipartite(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
    for (std::uint32_t s = 1; s <= n; ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::queue<std::uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // Odd cycle: climb both endpoints to their lowest common ancestor.
                    std::vector<std::uint32_t> left{u}, right{v};
                    std::uint32_t a = u, b = v;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    BipartiteResult res;
                    res.bipartite = false;
                    res.odd_cycle = left;                    // u .. lca
                    right.pop_back();                        // drop duplicate lca
                    for (auto it = right.rbegin(); it != right.rend(); ++it)
                        res.odd_cycle.push_back(*it);        // .. back down to v
                    return res;
                }
            }
        }
    }
    return {};
}

TriangleCoverage every_vertex_on_triangle(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n < 3)
        throw std::invalid_argument("every_vertex_on_triangle: no triangles exist for n < 3");
    TriangleCoverage cover;
    cover.covered = true;
    cover.witness.resize(n);
    for (std::uint32_t m = 1; m <= n; ++m) {
        std::array<std::uint32_t, 3> tri =
            m >= 3 ? std::array<std::uint32_t, 3>{1, m - 1, m}
                   : std::array<std::uint32_t, 3>{1, 2, 3};
        if (!(g.adjacent(tri[0], tri[1]) && g.adjacent(tri[0], tri[2]) &&
              g.adjacent(tri[1], tri[2]))) {
            // Fall back to any common neighbor of m and one of its neighbors.
            bool found = false;
            for (std::uint32_t u : g.neighbors(m)) {
                if (rows_intersect(g, m, u)) {
                    tri = {m, u, first_common_neighbor(g, m, u)};
                    found = true;
                    break;
                }
            }
            if (!found) {
                cover.covered = false;
                tri = {0, 0, 0};
            }
        }
        cover.witness[m - 1] = tri;
    }
    return cover;
}

bool is_clique(const CoprimeGraph& g, std::span<const std::uint32_t> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_maximal_clique(const CoprimeGraph& g, std::span<const std::uint32_t> vertices) {
    if (!is_clique(g, vertices))
        return false;
    std::vector<bool> in(g.order() + 1, false);
    for (std::uint32_t v : vertices)
        in[v] = true;
    for (std::uint32_t w = 1; w <= g.order(); ++w) {
        if (in[w])
            continue;
        bool extends = true;
        for (std::uint32_t v : vertices)
            if (!g.adjacent(v, w)) {
                extends = false;
                break;
            }
        if (extends)
            return false;
    }
    return true;
}

bool disconnects(const CoprimeGraph& g, std::span<const std::uint32_t> removed) {
    const std::uint32_t n = g.order();
    const std::uint32_t words = g.words();
    std::vector<std::uint64_t> alive(words, 0);
    for (std::uint32_t v = 1; v <= n; ++v)
        alive[v >> 6] |= 1ull << (v & 63);
    std::uint32_t alive_count = n;
    for (std::uint32_t v : removed) {
        if (v < 1 || v > n)
            throw std::out_of_range("disconnects: vertex label out of range");
        if (alive[v >> 6] & (1ull << (v & 63))) {
            alive[v >> 6] &= ~(1ull << (v & 63));
            --alive_count;
        }
    }
    if (alive_count == 0)
        return false; // empty graph is trivially connected by convention
    std::uint32_t src = 0;
    for (std::uint32_t w = 0; w < words && !src; ++w)
        if (alive[w])
            src = w * 64 + std::countr_zero(alive[w]);
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0);
    visited[src >> 6] |= 1ull << (src & 63);
    frontier = visited;
    std::uint32_t seen = 1;
    while (true) {
        std::vector<std::uint64_t> next(words, 0);
        for (std::uint32_t w = 0; w < words; ++w) {
            std::uint64_t word = frontier[w];
            while (word) {
                std::uint32_t v = w * 64 + std::countr_zero(word);
                word &= word - 1;
                auto r = g.row(v);
                for (std::uint32_t k = 0; k < words; ++k)
                    next[k] |= r[k];
            }
        }
        bool any = false;
        for (std::uint32_t k = 0; k < words; ++k) {
            next[k] &= alive[k] & ~visited[k];
            visited[k] |= next[k];
            if (next[k]) {
                seen += std::popcount(next[k]);
                any = true;
            }
        }
        if (!any)
            break;
        frontier.swap(next);
    }
    return seen < alive_count;
}

std::string to_dot(const CoprimeGraph& g) {
    std::ostringstream os;
    os << "graph tcg_" << g.order() << " {\n";
    for (std::uint32_t v = 1; v <= g.order(); ++v)
        os << "  " << v << ";\n";
    for (std::uint32_t u = 1; u <= g.order(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            if (v > u)
                os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace tcg
