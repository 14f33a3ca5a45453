#include "tcg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tcg {

namespace {

// Lexicographic BFS visit order (labels 1..n).
std::vector<std::uint32_t> lexbfs_order(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    std::vector<std::vector<std::uint32_t>> label(n + 1);
    std::vector<bool> numbered(n + 1, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::uint32_t step = 0; step < n; ++step) {
        std::uint32_t pick = 0;
        for (std::uint32_t v = 1; v <= n; ++v) {
            if (numbered[v])
                continue;
            if (pick == 0 || std::lexicographical_compare(label[pick].begin(),
                                                          label[pick].end(),
                                                          label[v].begin(), label[v].end()))
                pick = v;
        }
        numbered[pick] = true;
        order.push_back(pick);
        for (std::uint32_t u : g.neighbors(pick))
            if (!numbered[u])
                label[u].push_back(n - step);
    }
    return order;
}

// Shortest u..w path whose internal vertices avoid `forbidden`; empty if none.
std::vector<std::uint32_t> restricted_path(const CoprimeGraph& g, std::uint32_t u,
                                           std::uint32_t w,
                                           const std::vector<bool>& forbidden) {
    const std::uint32_t n = g.order();
    std::vector<int> parent(n + 1, -1);
    std::queue<std::uint32_t> q;
    parent[u] = 0;
    q.push(u);
    while (!q.empty()) {
        std::uint32_t x = q.front();
        q.pop();
        for (std::uint32_t y : g.neighbors(x)) {
            if (parent[y] >= 0)
                continue;
            if (y != w && forbidden[y])
                continue;
            parent[y] = static_cast<int>(x);
            if (y == w) {
                std::vector<std::uint32_t> path{w};
                for (std::uint32_t c = x; c != 0; c = parent[c]) {
                    path.push_back(c);
                    if (c == u)
                        break;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(y);
        }
    }
    return {};
}

bool is_chordless_cycle(const CoprimeGraph& g, const std::vector<std::uint32_t>& cyc) {
    const std::size_t k = cyc.size();
    if (k < 4)
        return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                return false;
        }
    return true;
}

// Chordless cycle through v, u, w where u, w are non-adjacent neighbors of v:
// v + a shortest u..w path avoiding N[v] \ {u, w}.
std::vector<std::uint32_t> hole_through(const CoprimeGraph& g, std::uint32_t v,
                                        std::uint32_t u, std::uint32_t w) {
    std::vector<bool> forbidden(g.order() + 1, false);
    forbidden[v] = true;
    for (std::uint32_t x : g.neighbors(v))
        forbidden[x] = true;
    forbidden[u] = false; // endpoints stay usable
    forbidden[w] = false;
    auto path = restricted_path(g, u, w, forbidden);
    if (path.empty())
        return {};
    std::vector<std::uint32_t> cyc{v};
    cyc.insert(cyc.end(), path.begin(), path.end());
    if (!is_chordless_cycle(g, cyc))
        return {};
    return cyc;
}

} // namespace

ChordalityResult is_chordal(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n <= 3)
        return {};
    auto order = lexbfs_order(g);
    std::vector<std::uint32_t> pos(n + 1, 0); // position in the visit order
    for (std::uint32_t i = 0; i < n; ++i)
        pos[order[i]] = i;

    // Reverse visit order is a perfect elimination ordering iff chordal:
    // for each v, the earlier-visited neighbors minus the latest one must all
    // be adjacent to that latest one.
    for (std::uint32_t i = n; i-- > 0;) {
        std::uint32_t v = order[i];
        std::uint32_t anchor = 0;
        bool have = false;
        for (std::uint32_t x : g.neighbors(v))
            if (pos[x] < i && (!have || pos[x] > pos[anchor])) {
                anchor = x;
                have = true;
            }
        if (!have)
            continue;
        for (std::uint32_t x : g.neighbors(v)) {
            if (pos[x] >= i || x == anchor || g.adjacent(anchor, x))
                continue;
            // Failing triple (v, anchor, x): extract a hole.
            auto hole = hole_through(g, v, anchor, x);
            if (hole.empty()) {
                // The triple itself did not certify; scan all candidate triples.
                for (std::uint32_t c = 1; c <= n && hole.empty(); ++c) {
                    auto nb = g.neighbors(c);
                    for (std::size_t a = 0; a < nb.size() && hole.empty(); ++a)
                        for (std::size_t b = a + 1; b < nb.size() && hole.empty(); ++b)
                            if (!g.adjacent(nb[a], nb[b]))
                                hole = hole_through(g, c, nb[a], nb[b]);
                }
            }
            if (hole.empty())
                throw std::runtime_error("is_chordal: elimination test failed but no "
                                         "chordless cycle was found");
            return {false, hole};
        }
    }
    return {};
}

} // namespace tcg
