// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tcg/graph.hpp"
#include "tcg/numtheory.hpp"
#include "tcg/spectral.hpp"
#include "tcg/verify.hpp"

using namespace tcg;

namespace {

int failures = 0;
int index = 0;

void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%d/8] %-58s %s (%.2f s)%s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL",
                secs, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok)
        ++failures;
}

bool is_prime_small(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

int main() {
    run("reference spectra 3..15, 0.01 per entry", [](std::string& detail) {
        auto res = verify_reference_spectra(0.01);
        for (const auto& r : res.rows)
            if (!r.pass)
                detail += "n=" + std::to_string(r.n) + " dev=" + std::to_string(r.max_deviation) + " ";
        return res.all_pass;
    });

    run("clique number pi(n)+1 for 3 <= n <= 40", [](std::string& detail) {
        auto tables = PrimeTables::build(40);
        for (int n = 3; n <= 40; ++n) {
            auto g = CoprimeGraph::build(n);
            auto w = max_clique_exact(g, 64);
            if (!is_clique(g, w.vertices) ||
                w.vertices.size() != tables.pi(static_cast<std::uint32_t>(n)) + 1) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run("kappa <= |coprime cut| for 4 <= n <= 60; bound 9 at n=36", [](std::string& detail) {
        for (int n = 4; n <= 60; ++n) {
            auto g = CoprimeGraph::build(n);
            auto cut = primorial_cut(g);
            int kappa = vertex_connectivity_exact(g, 128);
            if (kappa > static_cast<int>(cut.removed.size())) {
                detail = "n=" + std::to_string(n) + " kappa=" + std::to_string(kappa) +
                         " bound=" + std::to_string(cut.removed.size());
                return false;
            }
            if (n == 36 && cut.removed.size() != 9) {
                detail = "bound at 36 is " + std::to_string(cut.removed.size());
                return false;
            }
        }
        return true;
    });

    run("mult(-1) >= |D| for 4 <= n <= 200; >= 2 at primes; = 2 at n=3",
        [](std::string& detail) {
            auto tables = PrimeTables::build(200);
            {
                auto A3 = SymmetricIntMatrix::adjacency(CoprimeGraph::build(3));
                if (exact_eigen_multiplicity(A3, -1) != 2) {
                    detail = "n=3";
                    return false;
                }
            }
            for (int n = 4; n <= 200; ++n) {
                auto A = SymmetricIntMatrix::adjacency(CoprimeGraph::build(n));
                int mult = exact_eigen_multiplicity(A, -1);
                int d = static_cast<int>(dominating_primes(tables, n).size());
                if (mult < d || mult < 1 || (is_prime_small(n) && mult < 2)) {
                    detail = "n=" + std::to_string(n) + " mult=" + std::to_string(mult) +
                             " |D|=" + std::to_string(d);
                    return false;
                }
            }
            return true;
        });

    run("nullity >= sum(k_i)-m for 4 <= n <= 200; 4 vs 3 at 12; 3 vs 3 at 10; singular",
        [](std::string& detail) {
            auto tables = PrimeTables::build(200);
            for (int n = 4; n <= 200; ++n) {
                auto A = SymmetricIntMatrix::adjacency(CoprimeGraph::build(n));
                int nullity = exact_eigen_multiplicity(A, 0);
                int bound = static_cast<int>(nullity_lower_bound(tables, n));
                if (nullity < bound || nullity < 1) { // nullity >= 1 <=> det(A) = 0
                    detail = "n=" + std::to_string(n) + " nullity=" + std::to_string(nullity) +
                             " bound=" + std::to_string(bound);
                    return false;
                }
                if (n == 12 && !(nullity == 4 && bound == 3))
                    return false;
                if (n == 10 && !(nullity == 3 && bound == 3))
                    return false;
            }
            return true;
        });

    run("radius: 2 at n=3 (1e-9); > 2 for 4..200; interlacing 3..60",
        [](std::string& detail) {
            auto spec3 = eigenvalues(SymmetricIntMatrix::adjacency(CoprimeGraph::build(3)));
            if (std::fabs(spectral_radius(spec3) - 2.0) > 1e-9) {
                detail = "n=3 radius";
                return false;
            }
            for (int n = 4; n <= 200; ++n) {
                auto spec = eigenvalues(SymmetricIntMatrix::adjacency(CoprimeGraph::build(n)));
                if (!(spectral_radius(spec) > 2.0)) {
                    detail = "n=" + std::to_string(n);
                    return false;
                }
            }
            auto prev = spec3.values;
            for (int n = 4; n <= 61; ++n) {
                auto cur = eigenvalues(SymmetricIntMatrix::adjacency(CoprimeGraph::build(n))).values;
                for (std::size_t k = 0; k < prev.size(); ++k)
                    if (!(cur[k] <= prev[k] + 1e-8 && prev[k] <= cur[k + 1] + 1e-8)) {
                        detail = "interlacing n=" + std::to_string(n) + " k=" + std::to_string(k);
                        return false;
                    }
                prev = cur;
            }
            return true;
        });

    run("structure 3..1000: diameter, girth, bipartite, triangles, n=7 block",
        [](std::string& detail) {
            for (int n = 3; n <= 1000; ++n) {
                auto g = CoprimeGraph::build(n);
                if (n >= 4 && diameter(g) != std::optional<int>(2)) {
                    detail = "diameter n=" + std::to_string(n);
                    return false;
                }
                if (girth(g) != std::optional<int>(3)) {
                    detail = "girth n=" + std::to_string(n);
                    return false;
                }
                if (is_bipartite(g).bipartite) {
                    detail = "bipartite n=" + std::to_string(n);
                    return false;
                }
                if (!every_vertex_on_triangle(g).covered) {
                    detail = "triangles n=" + std::to_string(n);
                    return false;
                }
            }
            auto w = tcg7_crossing_witnesses(CoprimeGraph::build(7));
            if (!w.all_hold()) {
                detail = "n=7 witnesses";
                return false;
            }
            return true;
        });

    run("floating multiplicities at 1e-6 equal exact ones, 3 <= n <= 100",
        [](std::string& detail) {
            for (int n = 3; n <= 100; ++n) {
                auto A = SymmetricIntMatrix::adjacency(CoprimeGraph::build(n));
                auto spec = eigenvalues(A);
                if (multiplicity_near(spec, 0.0, 1e-6) != exact_eigen_multiplicity(A, 0) ||
                    multiplicity_near(spec, -1.0, 1e-6) != exact_eigen_multiplicity(A, -1)) {
                    detail = "n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        });

    std::printf("ACCEPTANCE: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
