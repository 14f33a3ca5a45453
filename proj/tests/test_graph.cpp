#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcg/graph.hpp"
#include "tcg/kuratowski.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

using namespace tcg;

namespace {

// Brute-force maximum clique by recursive extension; oracle for small graphs.
int max_clique_brute(const std::vector<std::uint64_t>& adj, int n) {
    int best = 0;
    auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
        best = std::max(best, size);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & adj[v], size + 1);
        }
    };
    rec(rec, (n == 64 ? ~0ull : (1ull << n) - 1), 0);
    return best;
}

std::vector<std::uint64_t> adjacency_bits(const CoprimeGraph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (std::uint32_t u = 1; u <= g.order(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            adj[u - 1] |= 1ull << (v - 1);
    return adj;
}

// Any subset of >= 4 vertices inducing a cycle (every member of degree 2 and
// connected) is a chordless cycle; exhaustive oracle for chordality.
bool has_hole_brute(const CoprimeGraph& g) {
    const int n = static_cast<int>(g.order());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 4)
            continue;
        std::vector<std::uint32_t> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                verts.push_back(v + 1);
        bool cycle = true;
        for (std::uint32_t u : verts) {
            int deg = 0;
            for (std::uint32_t w : verts)
                deg += (u != w && g.adjacent(u, w));
            if (deg != 2) {
                cycle = false;
                break;
            }
        }
        if (!cycle)
            continue;
        // 2-regular: connected iff a single cycle covers all members
        std::set<std::uint32_t> seen{verts[0]};
        std::uint32_t prev = 0, cur = verts[0];
        while (true) {
            std::uint32_t next = 0;
            for (std::uint32_t w : verts)
                if (w != cur && w != prev && g.adjacent(cur, w)) {
                    next = w;
                    break;
                }
            if (next == 0 || seen.count(next))
                break;
            seen.insert(next);
            prev = cur;
            cur = next;
        }
        if (seen.size() == verts.size())
            return true;
    }
    return false;
}

// Minimum vertex cut by exhaustive subset removal; oracle for tiny graphs.
int connectivity_brute(const CoprimeGraph& g) {
    const int n = static_cast<int>(g.order());
    if (g.is_complete())
        return n - 1;
    for (int k = 0; k < n - 1; ++k) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k)
                continue;
            std::vector<std::uint32_t> removed;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    removed.push_back(v + 1);
            if (disconnects(g, removed))
                return k;
        }
    }
    return n - 1;
}

} // namespace

TEST_CASE("build examples") {
    CHECK(CoprimeGraph::build(3).is_complete());
    CHECK(CoprimeGraph::build(7).edge_count() == 17);
    auto g4 = CoprimeGraph::build(4);
    CHECK(g4.edge_count() == 5);
    CHECK(g4.adjacent(1, 2));
    CHECK(g4.adjacent(1, 3));
    CHECK(g4.adjacent(1, 4));
    CHECK(g4.adjacent(2, 3));
    CHECK(g4.adjacent(3, 4));
    CHECK_FALSE(g4.adjacent(2, 4));
    CHECK_THROWS_AS(CoprimeGraph::build(0), std::invalid_argument);
}

TEST_CASE("adjacency matches gcd and is symmetric") {
    for (std::uint32_t n : {1u, 2u, 50u, 300u}) {
        auto g = CoprimeGraph::build(n);
        for (std::uint32_t i = 1; i <= n; ++i) {
            CHECK_FALSE(g.adjacent(i, i));
            for (std::uint32_t j = 1; j <= n; ++j) {
                CHECK(g.adjacent(i, j) == (i != j && gcd(i, j) == 1));
                CHECK(g.adjacent(i, j) == g.adjacent(j, i));
            }
        }
        // vertex 1 is adjacent to everything else
        if (n >= 2)
            CHECK(g.degree(1) == n - 1);
    }
}

TEST_CASE("induced subgraph of the next graph") {
    for (std::uint32_t n = 1; n <= 120; ++n) {
        auto g = CoprimeGraph::build(n);
        auto h = CoprimeGraph::build(n + 1);
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j)
                CHECK(g.adjacent(i, j) == h.adjacent(i, j));
    }
}

TEST_CASE("diameter") {
    CHECK(*diameter(CoprimeGraph::build(7)) == 2);
    CHECK(*diameter(CoprimeGraph::build(2)) == 1);
    CHECK(*diameter(CoprimeGraph::build(3)) == 1);
    CHECK(*diameter(CoprimeGraph::build(1)) == 0);
    for (std::uint32_t n = 4; n <= 200; ++n)
        CHECK(*diameter(CoprimeGraph::build(n)) == 2);
}

TEST_CASE("girth") {
    CHECK(*girth(CoprimeGraph::build(3)) == 3);
    CHECK_FALSE(girth(CoprimeGraph::build(2)).has_value());
    CHECK_FALSE(girth(CoprimeGraph::build(1)).has_value());
    for (std::uint32_t n = 3; n <= 200; ++n)
        CHECK(*girth(CoprimeGraph::build(n)) == 3);
}

TEST_CASE("bipartiteness and odd-cycle witness") {
    CHECK(is_bipartite(CoprimeGraph::build(1)).bipartite);
    CHECK(is_bipartite(CoprimeGraph::build(2)).bipartite);
    for (std::uint32_t n = 3; n <= 200; ++n) {
        auto g = CoprimeGraph::build(n);
        auto r = is_bipartite(g);
        CHECK_FALSE(r.bipartite);
        REQUIRE(r.odd_cycle.size() >= 3);
        CHECK(r.odd_cycle.size() % 2 == 1);
        for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
            CHECK(g.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
    }
}

TEST_CASE("triangle coverage") {
    CHECK_THROWS_AS(every_vertex_on_triangle(CoprimeGraph::build(2)), std::invalid_argument);
    auto g5 = CoprimeGraph::build(5);
    auto c5 = every_vertex_on_triangle(g5);
    CHECK(c5.covered);
    CHECK(c5.witness[4] == std::array<std::uint32_t, 3>{1, 4, 5});
    auto c3 = every_vertex_on_triangle(CoprimeGraph::build(3));
    CHECK(c3.covered);
    CHECK(c3.witness[0] == std::array<std::uint32_t, 3>{1, 2, 3});
    for (std::uint32_t n = 3; n <= 300; ++n) {
        auto g = CoprimeGraph::build(n);
        auto c = every_vertex_on_triangle(g);
        CHECK(c.covered);
        for (std::uint32_t m = 1; m <= n; ++m) {
            auto t = c.witness[m - 1];
            CHECK((t[0] == m || t[1] == m || t[2] == m));
            CHECK(g.adjacent(t[0], t[1]));
            CHECK(g.adjacent(t[0], t[2]));
            CHECK(g.adjacent(t[1], t[2]));
            if (m >= 3)
                CHECK(t == std::array<std::uint32_t, 3>{1, m - 1, m});
        }
    }
}

TEST_CASE("chordality") {
    CHECK(is_chordal(CoprimeGraph::build(3)).chordal);
    CHECK(is_chordal(CoprimeGraph::build(7)).chordal);

    auto g15 = CoprimeGraph::build(15);
    auto r15 = is_chordal(g15);
    CHECK_FALSE(r15.chordal);
    REQUIRE(r15.hole.size() >= 4);
    const auto& h = r15.hole;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == h.size() - 1);
            CHECK(g15.adjacent(h[i], h[j]) == consecutive);
        }

    // (4, 9, 8, 15) is itself a chordless 4-cycle
    CHECK(g15.adjacent(4, 9));
    CHECK(g15.adjacent(9, 8));
    CHECK(g15.adjacent(8, 15));
    CHECK(g15.adjacent(15, 4));
    CHECK_FALSE(g15.adjacent(4, 8));
    CHECK_FALSE(g15.adjacent(9, 15));
}

TEST_CASE("chordality against exhaustive hole search") {
    for (std::uint32_t n = 3; n <= 18; ++n) {
        auto g = CoprimeGraph::build(n);
        auto r = is_chordal(g);
        CHECK(r.chordal == !has_hole_brute(g));
    }
}

TEST_CASE("chordal exactly below 9 on the tested range") {
    for (std::uint32_t n = 3; n <= 60; ++n) {
        auto g = CoprimeGraph::build(n);
        auto r = is_chordal(g);
        CHECK(r.chordal == (n <= 8));
        if (!r.chordal) {
            REQUIRE(r.hole.size() >= 4);
            for (std::size_t i = 0; i < r.hole.size(); ++i)
                for (std::size_t j = i + 1; j < r.hole.size(); ++j) {
                    bool consecutive = (j == i + 1) || (i == 0 && j == r.hole.size() - 1);
                    CHECK(g.adjacent(r.hole[i], r.hole[j]) == consecutive);
                }
        }
    }
}

TEST_CASE("prime clique") {
    auto t = PrimeTables::build(100);
    auto g7 = CoprimeGraph::build(7);
    auto w7 = prime_clique(g7, t);
    CHECK(w7.vertices == std::vector<std::uint32_t>{1, 2, 3, 5, 7});
    CHECK(w7.is_maximal);

    auto w2 = prime_clique(CoprimeGraph::build(2), t);
    CHECK(w2.vertices == std::vector<std::uint32_t>{1, 2});
    CHECK(w2.is_maximal);

    auto g36 = CoprimeGraph::build(36);
    auto w36 = prime_clique(g36, t);
    CHECK(w36.vertices.size() == 12);
    CHECK(w36.is_maximal);

    for (std::uint32_t n = 2; n <= 100; ++n) {
        auto g = CoprimeGraph::build(n);
        auto w = prime_clique(g, t);
        CHECK(is_clique(g, w.vertices));
        CHECK(w.is_maximal);
        CHECK(w.vertices.size() == t.pi(n) + 1);
    }
}

TEST_CASE("exact maximum clique") {
    CHECK(max_clique_exact(CoprimeGraph::build(7)).vertices.size() == 5);
    CHECK(max_clique_exact(CoprimeGraph::build(3)).vertices.size() == 3);
    CHECK(max_clique_exact(CoprimeGraph::build(12)).vertices.size() == 6);
    CHECK_THROWS_AS(max_clique_exact(CoprimeGraph::build(70)), std::invalid_argument);
    CHECK_THROWS_AS(max_clique_exact(CoprimeGraph::build(10), 8), std::invalid_argument);

    for (std::uint32_t n = 2; n <= 18; ++n) {
        auto g = CoprimeGraph::build(n);
        auto w = max_clique_exact(g);
        CHECK(is_clique(g, w.vertices));
        CHECK(is_maximal_clique(g, w.vertices));
        CHECK(static_cast<int>(w.vertices.size()) == max_clique_brute(adjacency_bits(g), n));
    }
}

TEST_CASE("primorial cut") {
    auto g36 = CoprimeGraph::build(36);
    auto cut36 = primorial_cut(g36);
    CHECK(cut36.removed ==
          std::vector<std::uint32_t>{1, 7, 11, 13, 17, 19, 23, 29, 31});
    CHECK(cut36.isolated_vertex == 30);
    CHECK(cut36.removed.size() == 9);

    auto cut6 = primorial_cut(CoprimeGraph::build(6));
    CHECK(cut6.isolated_vertex == 6);
    CHECK(cut6.removed == std::vector<std::uint32_t>{1, 5});

    auto cut4 = primorial_cut(CoprimeGraph::build(4));
    CHECK(cut4.isolated_vertex == 2);
    CHECK(cut4.removed == std::vector<std::uint32_t>{1, 3});

    CHECK_THROWS_AS(primorial_cut(CoprimeGraph::build(3)), std::invalid_argument);

    for (std::uint32_t n = 4; n <= 400; ++n) {
        auto g = CoprimeGraph::build(n);
        auto cut = primorial_cut(g);
        CHECK(disconnects(g, cut.removed));
        // removed set is exactly the neighborhood of the isolated vertex
        for (std::uint32_t x : g.neighbors(cut.isolated_vertex))
            CHECK(std::find(cut.removed.begin(), cut.removed.end(), x) != cut.removed.end());
    }
}

TEST_CASE("exact vertex connectivity") {
    CHECK(vertex_connectivity_exact(CoprimeGraph::build(1)) == 0);
    CHECK(vertex_connectivity_exact(CoprimeGraph::build(2)) == 1);
    CHECK(vertex_connectivity_exact(CoprimeGraph::build(3)) == 2);
    CHECK(vertex_connectivity_exact(CoprimeGraph::build(4)) == 2);
    CHECK_THROWS_AS(vertex_connectivity_exact(CoprimeGraph::build(140)),
                    std::invalid_argument);

    // {1,3} disconnects the 4-vertex graph; no single vertex does
    auto g4 = CoprimeGraph::build(4);
    CHECK(disconnects(g4, std::vector<std::uint32_t>{1, 3}));
    for (std::uint32_t v = 1; v <= 4; ++v)
        CHECK_FALSE(disconnects(g4, std::vector<std::uint32_t>{v}));

    for (std::uint32_t n = 2; n <= 12; ++n) {
        auto g = CoprimeGraph::build(n);
        CHECK(vertex_connectivity_exact(g) == connectivity_brute(g));
    }

    auto g36 = CoprimeGraph::build(36);
    int kappa36 = vertex_connectivity_exact(g36);
    CHECK(kappa36 <= 9);
    CHECK(kappa36 == 9); // the primorial bound is attained here
}

TEST_CASE("connectivity bounded by the primorial cut") {
    for (std::uint32_t n = 4; n <= 40; ++n) {
        auto g = CoprimeGraph::build(n);
        CHECK(vertex_connectivity_exact(g) <=
              static_cast<int>(primorial_cut(g).removed.size()));
    }
}

TEST_CASE("planarity") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        auto r = planarity_status(CoprimeGraph::build(n));
        CHECK(r.planar);
        auto g = CoprimeGraph::build(n);
        if (n >= 3)
            CHECK(g.edge_count() <= 3ull * n - 6); // sanity: planar edge bound
    }
    for (std::uint32_t n : {7u, 8u, 12u, 100u}) {
        auto g = CoprimeGraph::build(n);
        auto r = planarity_status(g);
        CHECK_FALSE(r.planar);
        CHECK(r.k5_witness == std::vector<std::uint32_t>{1, 2, 3, 5, 7});
        CHECK(is_clique(g, r.k5_witness));
    }
}

TEST_CASE("subdivision search on handcrafted graphs") {
    SmallGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            k5.add_edge(i, j);
    CHECK(has_k5_subdivision(k5));
    CHECK_FALSE(has_k33_subdivision(k5));

    SmallGraph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            k33.add_edge(i, j);
    CHECK(has_k33_subdivision(k33));
    CHECK_FALSE(has_k5_subdivision(k33));

    // K5 with one edge subdivided through vertex 5 still contains a K5 subdivision
    SmallGraph k5sub(6);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1))
                k5sub.add_edge(i, j);
    k5sub.add_edge(0, 5);
    k5sub.add_edge(5, 1);
    CHECK(has_k5_subdivision(k5sub));

    SmallGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK_FALSE(has_k5_subdivision(c4));
    CHECK_FALSE(has_k33_subdivision(c4));
}

TEST_CASE("crossing-number witnesses at n = 7") {
    auto g7 = CoprimeGraph::build(7);
    auto w = tcg7_crossing_witnesses(g7);
    CHECK(w.edge_count == 17);
    CHECK(w.planar_edge_bound == 15);
    CHECK(w.edge_bound_exceeded);
    CHECK(w.k5_a_complete);
    CHECK(w.k5_b_complete);
    CHECK(w.k33_present);
    CHECK(w.all_hold());
    CHECK_THROWS_AS(tcg7_crossing_witnesses(CoprimeGraph::build(8)), std::invalid_argument);
}

TEST_CASE("dot export") {
    auto dot7 = to_dot(CoprimeGraph::build(7));
    CHECK(std::count(dot7.begin(), dot7.end(), ';') == 7 + 17);
    CHECK(dot7.find("graph tcg_7") == 0);
    auto dot2 = to_dot(CoprimeGraph::build(2));
    CHECK(dot2.find("1 -- 2") != std::string::npos);
    CHECK(std::count(dot2.begin(), dot2.end(), ';') == 2 + 1);
}

TEST_CASE("maximum clique on random graphs vs brute force") {
    std::mt19937 gen(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 8 + static_cast<int>(gen() % 9);
        const int density = 25 + static_cast<int>(gen() % 55);
        std::vector<std::uint64_t> adj(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (static_cast<int>(gen() % 100) < density) {
                    adj[i] |= 1ull << j;
                    adj[j] |= 1ull << i;
                }
        std::uint64_t best = max_clique_bits(adj, n);
        CHECK(std::popcount(best) == max_clique_brute(adj, n));
        // the returned mask really is a clique
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((best >> i & 1) && (best >> j & 1))
                    CHECK((adj[i] >> j & 1) == 1);
    }
}
