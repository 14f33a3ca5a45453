#include "tcg/kuratowski.hpp"
#include "tcg/graph.hpp"

#include <functional>
#include <stdexcept>

namespace tcg {

SmallGraph SmallGraph::from(const CoprimeGraph& g) {
    SmallGraph s(static_cast<int>(g.order()));
    for (std::uint32_t u = 1; u <= g.order(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            if (v > u)
                s.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
    return s;
}

int SmallGraph::edge_count() const {
    int e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e += adjacent(u, v);
    return e;
}

namespace {

// Embed internally disjoint paths for every required branch pair, using only
// non-branch vertices as interior points, one pair at a time with backtracking.
struct SubdivisionSearch {
    const SmallGraph& g;
    std::vector<std::pair<int, int>> pairs;
    std::uint32_t branch_mask = 0;
    std::uint32_t used = 0;

    bool embed(std::size_t idx) {
        if (idx == pairs.size())
            return true;
        auto [u, w] = pairs[idx];
        return extend(u, w, idx);
    }

    // Grow a path from `cur` toward `w`; interior vertices must be free.
    bool extend(int cur, int w, std::size_t idx) {
        if (g.adjacent(cur, w) && embed(idx + 1))
            return true;
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t bit = 1u << v;
            if ((branch_mask | used) & bit)
                continue;
            if (!g.adjacent(cur, v))
                continue;
            used |= bit;
            if (extend(v, w, idx))
                return true;
            used &= ~bit;
        }
        return false;
    }
};

bool try_branches(const SmallGraph& g, const std::vector<int>& branches,
                  std::vector<std::pair<int, int>> pairs) {
    SubdivisionSearch search{g, std::move(pairs), 0, 0};
    for (int b : branches)
        search.branch_mask |= 1u << b;
    return search.embed(0);
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f,
                     std::vector<int>& acc, int start, bool& stop) {
    if (stop)
        return;
    if (static_cast<int>(acc.size()) == k) {
        stop = f(acc);
        return;
    }
    for (int v = start; v < n && !stop; ++v) {
        acc.push_back(v);
        for_each_subset(n, k, f, acc, v + 1, stop);
        acc.pop_back();
    }
}

bool any_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> acc;
    bool stop = false;
    for_each_subset(n, k, f, acc, 0, stop);
    return stop;
}

} // namespace

bool has_k5_subdivision(const SmallGraph& g) {
    if (g.n < 5)
        return false;
    return any_subset(g.n, 5, [&](const std::vector<int>& b) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                pairs.emplace_back(b[i], b[j]);
        return try_branches(g, b, std::move(pairs));
    });
}

bool has_k33_subdivision(const SmallGraph& g) {
    if (g.n < 6)
        return false;
    return any_subset(g.n, 6, [&](const std::vector<int>& b) {
        // All 3+3 bipartitions of the chosen branch set; fixing b[0]'s side
        // halves the symmetric duplicates.
        for (int m1 = 1; m1 < 6; ++m1)
            for (int m2 = m1 + 1; m2 < 6; ++m2) {
                std::vector<int> left{b[0], b[m1], b[m2]}, right;
                for (int i = 1; i < 6; ++i)
                    if (i != m1 && i != m2)
                        right.push_back(b[i]);
                std::vector<std::pair<int, int>> pairs;
                for (int l : left)
                    for (int r : right)
                        pairs.emplace_back(l, r);
                if (try_branches(g, b, std::move(pairs)))
                    return true;
            }
        return false;
    });
}

PlanarityResult planarity_status(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n >= 7) {
        PlanarityResult res;
        res.planar = false;
        res.k5_witness.assign(kCrossingK5A.begin(), kCrossingK5A.end());
        if (!is_clique(g, res.k5_witness))
            throw std::runtime_error("planarity_status: K5 witness failed"); // unreachable
        return res;
    }
    SmallGraph s = SmallGraph::from(g);
    if (has_k5_subdivision(s) || has_k33_subdivision(s))
        throw std::runtime_error("planarity_status: unexpected Kuratowski subdivision "
                                 "below 7 vertices");
    return {true, {}};
}

CrossingWitnesses tcg7_crossing_witnesses(const CoprimeGraph& g) {
    if (g.order() != 7)
        throw std::invalid_argument("tcg7_crossing_witnesses: graph must have 7 vertices");
    CrossingWitnesses w;
    w.edge_count = static_cast<int>(g.edge_count());
    w.planar_edge_bound = 3 * 7 - 6;
    // Removing one edge leaves 16 > 15 edges, beyond what any planar graph
    // on 7 vertices can carry.
    w.edge_bound_exceeded = (w.edge_count - 1) > w.planar_edge_bound;
    w.k5_a_complete = is_clique(g, kCrossingK5A);
    w.k5_b_complete = is_clique(g, kCrossingK5B);
    w.k33_present = true;
    for (std::uint32_t a : kCrossingK33Odd)
        for (std::uint32_t b : kCrossingK33Even)
            w.k33_present = w.k33_present && g.adjacent(a, b);
    return w;
}

} // namespace tcg
