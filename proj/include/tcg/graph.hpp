#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcg/numtheory.hpp"

namespace tcg {

/// Coprime graph on vertices 1..n: i ~ j iff i != j and gcd(i, j) = 1.
/// Rows are 64-bit bitsets indexed directly by vertex label (bit 0 unused),
/// immutable after build.
class CoprimeGraph {
public:
    static CoprimeGraph build(std::uint32_t n);        // row-parallel
    static CoprimeGraph build_serial(std::uint32_t n); // reference, plain double loop

    std::uint32_t order() const { return n_; }
    std::uint32_t words() const { return words_; }

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const std::uint64_t> row(std::uint32_t v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::uint32_t degree(std::uint32_t v) const;
    std::uint64_t edge_count() const;
    bool is_complete() const { return edge_count() == std::uint64_t(n_) * (n_ - 1) / 2; }
    std::vector<std::uint32_t> neighbors(std::uint32_t v) const;

    bool operator==(const CoprimeGraph&) const = default;

private:
    explicit CoprimeGraph(std::uint32_t n);
    void set_edge(std::uint32_t u, std::uint32_t v);

    std::uint32_t n_ = 0;
    std::uint32_t words_ = 0;
    std::vector<std::uint64_t> bits_; // (n_+1) rows of `words_` words
};

// ---- distance metrics ----

/// Max over vertex pairs of shortest-path distance; nullopt if disconnected.
std::optional<int> diameter(const CoprimeGraph& g);
/// Same value via per-source BFS; serial reference for `diameter`.
std::optional<int> diameter_bfs_serial(const CoprimeGraph& g);

/// Length of the shortest cycle; nullopt if acyclic.
std::optional<int> girth(const CoprimeGraph& g);

struct BipartiteResult {
    bool bipartite = true;
    std::vector<std::uint32_t> odd_cycle; // nonempty witness iff !bipartite
};
BipartiteResult is_bipartite(const CoprimeGraph& g);

struct TriangleCoverage {
    bool covered = false;                               // every vertex on some triangle
    std::vector<std::array<std::uint32_t, 3>> witness;  // witness[v-1] is v's triangle
};
/// Requires n >= 3. The witness for vertex m defaults to {1, m-1, m}.
TriangleCoverage every_vertex_on_triangle(const CoprimeGraph& g);

// ---- chordality ----

struct ChordalityResult {
    bool chordal = true;
    std::vector<std::uint32_t> hole; // chordless cycle of length >= 4 iff !chordal
};
/// Lex-BFS + perfect-elimination-ordering test.
ChordalityResult is_chordal(const CoprimeGraph& g);

// ---- cliques ----

struct CliqueWitness {
    std::vector<std::uint32_t> vertices;
    bool is_maximal = false;
};

/// True iff all pairs inside `vertices` are adjacent.
bool is_clique(const CoprimeGraph& g, std::span<const std::uint32_t> vertices);
/// True iff `vertices` is a clique and no outside vertex extends it.
bool is_maximal_clique(const CoprimeGraph& g, std::span<const std::uint32_t> vertices);

/// The clique {1} and all primes <= n, with maximality verified vertex by vertex.
CliqueWitness prime_clique(const CoprimeGraph& g, const PrimeTables& tables);

/// Branch-and-bound maximum clique (greedy-coloring bound). Refuses n > cap.
CliqueWitness max_clique_exact(const CoprimeGraph& g, int cap = 64);

/// The underlying search on raw bitset adjacency over vertices 0..n-1 (n <= 64);
/// returns the maximum clique as a bitmask.
std::uint64_t max_clique_bits(const std::vector<std::uint64_t>& adj, int n);

// ---- connectivity ----

struct CutWitness {
    std::vector<std::uint32_t> removed;
    std::uint32_t isolated_vertex = 0;
};

/// True iff deleting `removed` leaves a disconnected graph.
bool disconnects(const CoprimeGraph& g, std::span<const std::uint32_t> removed);

/// Separating set {x : gcd(x, m) = 1} for the largest primorial m <= n.
/// Requires n >= 4; validates by BFS that the residual graph is disconnected.
CutWitness primorial_cut(const CoprimeGraph& g);

/// Exact vertex connectivity: min over non-adjacent pairs (s, t) of the
/// vertex-split max-flow; n-1 for complete graphs. Refuses n > cap.
int vertex_connectivity_exact(const CoprimeGraph& g, int cap = 128);

// ---- planarity ----

struct PlanarityResult {
    bool planar = false;
    std::vector<std::uint32_t> k5_witness; // complete 5-set iff !planar
};
/// n >= 7: nonplanar with the K5 on {1,2,3,5,7}. n <= 6: planar, certified by
/// exhaustive absence of K5/K3,3 subdivisions.
PlanarityResult planarity_status(const CoprimeGraph& g);

struct CrossingWitnesses {
    int edge_count = 0;           // 17
    int planar_edge_bound = 0;    // 3n-6 = 15
    bool edge_bound_exceeded = false; // 16 > 15, so one edge removal can't planarize
    bool k5_a_complete = false;   // induced {1,2,3,5,7}
    bool k5_b_complete = false;   // induced {1,3,4,5,7}
    bool k33_present = false;     // all of {1,5,7} x {2,4,6}
    bool all_hold() const {
        return edge_count == 17 && edge_bound_exceeded && k5_a_complete && k5_b_complete &&
               k33_present;
    }
};
inline constexpr std::array<std::uint32_t, 5> kCrossingK5A = {1, 2, 3, 5, 7};
inline constexpr std::array<std::uint32_t, 5> kCrossingK5B = {1, 3, 4, 5, 7};
inline constexpr std::array<std::uint32_t, 3> kCrossingK33Odd = {1, 5, 7};
inline constexpr std::array<std::uint32_t, 3> kCrossingK33Even = {2, 4, 6};

/// The lower-bound witnesses for the crossing number of the 7-vertex graph.
/// Throws unless g has exactly 7 vertices.
CrossingWitnesses tcg7_crossing_witnesses(const CoprimeGraph& g);

// ---- export ----

std::string to_dot(const CoprimeGraph& g);

} // namespace tcg
