#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace tcg {

// Sieve limit guard; dense boolean sieve memory stays below ~10 MB.
inline constexpr std::uint32_t kMaxSieveLimit = 10'000'000;

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

/// Primes up to a fixed limit plus the prime-counting table pi_of[0..limit].
struct PrimeTables {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> pi_of;

    static PrimeTables build(std::uint32_t n);

    /// pi(m) = number of primes <= m. Throws std::out_of_range for m > limit.
    std::uint32_t pi(std::uint32_t m) const;
};

inline PrimeTables build_prime_tables(std::uint32_t n) { return PrimeTables::build(n); }

/// Primes p with 2p > n and p <= n. Every such p is adjacent to all other
/// vertices of the coprime graph on {1..n}.
std::vector<std::uint32_t> dominating_primes(const PrimeTables& tables, std::uint32_t n);

struct PrimorialInfo {
    int k = 0;               // number of primes multiplied
    std::uint64_t value = 0; // 2 * 3 * 5 * ... * p_k
};

/// Largest primorial not exceeding n. Requires n >= 2.
PrimorialInfo largest_primorial_leq(std::uint64_t n);

/// All x in [1, n] with gcd(x, m) = 1, ascending.
std::vector<std::uint32_t> coprime_set(std::uint32_t n, std::uint64_t m);

/// For each prime p <= n, the largest k with p^k <= n.
std::map<std::uint32_t, std::uint32_t> prime_power_exponents(const PrimeTables& tables,
                                                             std::uint32_t n);

/// (sum of k_i) - m over the primes p_i <= n. Requires n >= 2.
std::uint32_t nullity_lower_bound(const PrimeTables& tables, std::uint32_t n);

} // namespace tcg
