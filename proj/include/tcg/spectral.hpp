#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tcg {

class CoprimeGraph;

inline constexpr std::uint64_t kDefaultSeed = 20240612;
inline constexpr int kMaxMatrixOrder = 4096;

/// Dense symmetric matrix with small integer entries (adjacency A, shifts A - lambda*I).
struct SymmetricIntMatrix {
    int order = 0;
    std::vector<std::int64_t> entries; // row-major, order x order

    static SymmetricIntMatrix adjacency(const CoprimeGraph& g);

    std::int64_t at(int i, int j) const { return entries[std::size_t(i) * order + j]; }
    std::int64_t& at(int i, int j) { return entries[std::size_t(i) * order + j]; }

    SymmetricIntMatrix shifted(std::int64_t lambda) const; // M - lambda*I
    bool is_symmetric() const;
    bool rows_identical(int i, int j) const;
    std::int64_t trace() const;
};

struct Cluster {
    double value = 0.0; // mean of the clustered eigenvalues
    int multiplicity = 0;
};

/// Ascending eigenvalues plus gap-based multiplicity clusters at `cluster_tol`.
struct Spectrum {
    std::vector<double> values;
    std::vector<Cluster> clusters;
    double cluster_tol = 1e-6;
};

struct JacobiOptions {
    double rel_tol = 1e-12; // converged when off-diagonal Frobenius < rel_tol * ||M||_F
    int max_sweeps = 100;
};

class JacobiError : public std::runtime_error {
public:
    JacobiError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Cyclic Jacobi with threshold pivoting; serial reference implementation.
std::vector<double> jacobi_eigenvalues_cyclic(std::vector<double> a, int n,
                                              const JacobiOptions& opt = {});

/// Round-robin Jacobi: each round applies disjoint rotations, row phase and
/// column phase parallelized. Same convergence criterion as the cyclic solver.
std::vector<double> jacobi_eigenvalues_rounds(std::vector<double> a, int n,
                                              const JacobiOptions& opt = {});

Spectrum make_spectrum(std::vector<double> values, double cluster_tol = 1e-6);

/// Full spectrum of M. `rel_tol` is the Jacobi convergence factor.
Spectrum eigenvalues(const SymmetricIntMatrix& m, double rel_tol = 1e-12,
                     double cluster_tol = 1e-6);

/// Count of eigenvalues within `tol` of `lambda`.
int multiplicity_near(const Spectrum& s, double lambda, double tol);

double spectral_radius(const Spectrum& s);

// ---- exact rank over the rationals via random large primes ----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
bool is_prime_u64(std::uint64_t x);
/// `count` distinct primes in (2^60, 2^61), deterministic per seed.
std::vector<std::uint64_t> rank_check_primes(std::uint64_t seed, int count = 3);

int rank_mod(const SymmetricIntMatrix& m, std::uint64_t p, bool parallel = true);

/// Rank over Q: max of rank_mod over 3 seeded primes near 2^61 (rank mod p
/// never exceeds the rational rank and equals it for almost every p).
int exact_rank(const SymmetricIntMatrix& m, std::uint64_t seed = kDefaultSeed);

/// Exact multiplicity of integer eigenvalue `lambda`: order - rank(M - lambda*I).
int exact_eigen_multiplicity(const SymmetricIntMatrix& m, std::int64_t lambda,
                             std::uint64_t seed = kDefaultSeed);

bool is_singular(const SymmetricIntMatrix& m, std::uint64_t seed = kDefaultSeed);

// ---- serialization ----

/// "n,v1,v2,..." with eigenvalues ascending at 4 decimals.
std::string spectrum_csv_row(int n, const Spectrum& s);
nlohmann::ordered_json spectrum_json(const Spectrum& s);

} // namespace tcg
