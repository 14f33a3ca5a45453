// Timing harness for the parallel kernels against their serial references:
// adjacency construction, pairwise-distance scan, round-robin vs cyclic
// Jacobi, and modular-rank elimination.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tcg/graph.hpp"
#include "tcg/spectral.hpp"

using namespace tcg;

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, int n, double serial, double parallel) {
    std::printf("%-28s n=%-5d serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
                name.c_str(), n, serial, parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1)
        scale = 1;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    {
        const int n = 3000 * scale;
        double ts = seconds([&] { (void)CoprimeGraph::build_serial(n); });
        double tp = seconds([&] { (void)CoprimeGraph::build(n); });
        report("adjacency build", n, ts, tp);
    }
    {
        const int n = 1200 * scale;
        auto g = CoprimeGraph::build(n);
        std::optional<int> a, b;
        double ts = seconds([&] { a = diameter_bfs_serial(g); });
        double tp = seconds([&] { b = diameter(g); });
        report("diameter", n, ts, tp);
        if (a != b)
            std::printf("  MISMATCH: serial %d parallel %d\n", a.value_or(-1), b.value_or(-1));
    }
    {
        const int n = 320 * scale;
        auto m = SymmetricIntMatrix::adjacency(CoprimeGraph::build(n));
        std::vector<double> dense(m.entries.begin(), m.entries.end());
        std::vector<double> ev_c, ev_r;
        double ts = seconds([&] { ev_c = jacobi_eigenvalues_cyclic(dense, n); });
        double tp = seconds([&] { ev_r = jacobi_eigenvalues_rounds(dense, n); });
        report("jacobi eigenvalues", n, ts, tp);
        double worst = 0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(ev_c[i] - ev_r[i]));
        std::printf("  max |lambda_cyclic - lambda_rounds| = %.3e\n", worst);
    }
    {
        const int n = 480 * scale;
        auto m = SymmetricIntMatrix::adjacency(CoprimeGraph::build(n));
        auto primes = rank_check_primes(kDefaultSeed, 1);
        int rs = 0, rp = 0;
        double ts = seconds([&] { rs = rank_mod(m, primes[0], false); });
        double tp = seconds([&] { rp = rank_mod(m, primes[0], true); });
        report("modular rank", n, ts, tp);
        if (rs != rp)
            std::printf("  MISMATCH: serial %d parallel %d\n", rs, rp);
    }
    return 0;
}
