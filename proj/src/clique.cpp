#include "tcg/graph.hpp"

#include <bit>
#include <stdexcept>

namespace tcg {

CliqueWitness prime_clique(const CoprimeGraph& g, const PrimeTables& tables) {
    const std::uint32_t n = g.order();
    if (n < 2)
        throw std::invalid_argument("prime_clique: n must be >= 2");
    if (n > tables.limit)
        throw std::out_of_range("prime_clique: n > tables.limit");
    CliqueWitness w;
    w.vertices.push_back(1);
    for (std::uint32_t p : tables.primes) {
        if (p > n)
            break;
        w.vertices.push_back(p);
    }
    if (!is_clique(g, w.vertices))
        throw std::runtime_error("prime_clique: prime set is not a clique"); // unreachable
    w.is_maximal = is_maximal_clique(g, w.vertices);
    return w;
}

namespace {

// Bitset branch-and-bound on <= 64 vertices (labels shifted to bits 0..n-1).
struct CliqueSearch {
    int n;
    std::vector<std::uint64_t> adj;
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t current, int size, std::uint64_t candidates) {
        if (candidates == 0) {
            if (size > best) {
                best = size;
                best_set = current;
            }
            return;
        }
        // Greedy coloring of the candidate set; color index bounds the clique
        // that can still be built from each vertex.
        std::vector<int> order_v, order_c;
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t admissible = uncolored;
            while (admissible) {
                int v = std::countr_zero(admissible);
                std::uint64_t bit = 1ull << v;
                admissible &= ~(adj[v] | bit);
                uncolored &= ~bit;
                order_v.push_back(v);
                order_c.push_back(color);
            }
        }
        for (int i = static_cast<int>(order_v.size()) - 1; i >= 0; --i) {
            if (size + order_c[i] <= best)
                return; // colors ascend, so everything earlier is bounded too
            int v = order_v[i];
            std::uint64_t bit = 1ull << v;
            expand(current | bit, size + 1, candidates & adj[v]);
            candidates &= ~bit;
        }
    }
};

} // namespace

std::uint64_t max_clique_bits(const std::vector<std::uint64_t>& adj, int n) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("max_clique_bits: n must be in [0, 64]");
    if (n == 0)
        return 0;
    CliqueSearch search;
    search.n = n;
    search.adj = adj;
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    search.expand(0, 0, all);
    return search.best_set;
}

CliqueWitness max_clique_exact(const CoprimeGraph& g, int cap) {
    const int n = static_cast<int>(g.order());
    if (cap < 1 || cap > 64)
        throw std::invalid_argument("max_clique_exact: cap must be in [1, 64]");
    if (n > cap)
        throw std::invalid_argument("max_clique_exact: order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    std::vector<std::uint64_t> adj(n, 0);
    for (int u = 1; u <= n; ++u)
        for (std::uint32_t v : g.neighbors(static_cast<std::uint32_t>(u)))
            adj[u - 1] |= 1ull << (v - 1);
    std::uint64_t best = max_clique_bits(adj, n);

    CliqueWitness w;
    for (int v = 0; v < n; ++v)
        if (best & (1ull << v))
            w.vertices.push_back(static_cast<std::uint32_t>(v + 1));
    w.is_maximal = true; // a maximum clique is maximal
    return w;
}

} // namespace tcg
