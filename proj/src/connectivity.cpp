#include "tcg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace tcg {

CutWitness primorial_cut(const CoprimeGraph& g) {
    const std::uint32_t n = g.order();
    if (n < 4)
        throw std::invalid_argument("primorial_cut: needs n >= 4 for a separating set");
    PrimorialInfo info = largest_primorial_leq(n);
    CutWitness cut;
    cut.isolated_vertex = static_cast<std::uint32_t>(info.value);
    cut.removed = coprime_set(n, info.value);
    for (std::uint32_t x : g.neighbors(cut.isolated_vertex))
        if (gcd(x, info.value) != 1)
            throw std::runtime_error("primorial_cut: neighbor survives removal"); // unreachable
    if (!disconnects(g, cut.removed))
        throw std::runtime_error("primorial_cut: residual graph stayed connected");
    return cut;
}

namespace {

// Dinic max-flow on the vertex-split digraph: v becomes v_in -> v_out with
// capacity 1; each edge u~w becomes out(u) -> in(w) and out(w) -> in(u) with
// ample capacity. Flow from out(s) to in(t) equals the vertex connectivity
// between non-adjacent s and t.
struct SplitFlow {
    int nodes = 0;
    std::vector<int> head, nxt, to, cap, cap0;
    std::vector<int> level, iter;

    static int in_node(std::uint32_t v) { return 2 * (static_cast<int>(v) - 1); }
    static int out_node(std::uint32_t v) { return 2 * (static_cast<int>(v) - 1) + 1; }

    explicit SplitFlow(const CoprimeGraph& g) {
        const std::uint32_t n = g.order();
        nodes = 2 * static_cast<int>(n);
        head.assign(nodes, -1);
        const int ample = static_cast<int>(n);
        for (std::uint32_t v = 1; v <= n; ++v)
            add_edge(in_node(v), out_node(v), 1);
        for (std::uint32_t u = 1; u <= n; ++u)
            for (std::uint32_t w : g.neighbors(u))
                add_edge(out_node(u), in_node(w), ample);
        cap0 = cap;
        level.assign(nodes, -1);
        iter.assign(nodes, 0);
    }

    void add_edge(int a, int b, int c) {
        to.push_back(b); cap.push_back(c); nxt.push_back(head[a]); head[a] = int(to.size()) - 1;
        to.push_back(a); cap.push_back(0); nxt.push_back(head[b]); head[b] = int(to.size()) - 1;
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{s};
        level[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            int u = q[i];
            for (int e = head[u]; e >= 0; e = nxt[e])
                if (cap[e] > 0 && level[to[e]] < 0) {
                    level[to[e]] = level[u] + 1;
                    q.push_back(to[e]);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t)
            return f;
        for (int& e = iter[u]; e >= 0; e = nxt[e]) {
            int v = to[e];
            if (cap[e] > 0 && level[v] == level[u] + 1) {
                int d = dfs(v, t, std::min(f, cap[e]));
                if (d > 0) {
                    cap[e] -= d;
                    cap[e ^ 1] += d;
                    return d;
                }
            }
        }
        return 0;
    }

    // Max flow, stopping once `limit` is reached (the caller only needs to
    // know the value is not below its current minimum).
    int max_flow(std::uint32_t s, std::uint32_t t, int limit) {
        cap = cap0;
        int flow = 0;
        int src = out_node(s), dst = in_node(t);
        while (flow < limit && bfs(src, dst)) {
            iter = head;
            int f;
            while (flow < limit && (f = dfs(src, dst, limit - flow)) > 0)
                flow += f;
        }
        return flow;
    }
};

} // namespace

int vertex_connectivity_exact(const CoprimeGraph& g, int cap) {
    const int n = static_cast<int>(g.order());
    if (cap < 1)
        throw std::invalid_argument("vertex_connectivity_exact: cap must be positive");
    if (n > cap)
        throw std::invalid_argument("vertex_connectivity_exact: order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    if (n == 1)
        return 0;
    if (g.is_complete())
        return n - 1;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t s = 1; s <= g.order(); ++s)
        for (std::uint32_t t = s + 1; t <= g.order(); ++t)
            if (!g.adjacent(s, t))
                pairs.emplace_back(s, t);

    std::atomic<int> best{n - 1};
#pragma omp parallel
    {
        SplitFlow flow(g);
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i) {
            int limit = best.load(std::memory_order_relaxed);
            if (limit == 0)
                continue;
            int f = flow.max_flow(pairs[i].first, pairs[i].second, limit);
            int cur = best.load(std::memory_order_relaxed);
            while (f < cur && !best.compare_exchange_weak(cur, f)) {
            }
        }
    }
    return best.load();
}

} // namespace tcg
