#include "tcg/spectral.hpp"

#include <algorithm>
#include <random>

namespace tcg {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Montgomery arithmetic for a fixed odd modulus < 2^62; keeps the O(n^3)
// elimination loop off the slow 128-by-64 division path.
struct Montgomery {
    std::uint64_t mod, ninv, r2;

    explicit Montgomery(std::uint64_t m) : mod(m) {
        ninv = m;
        for (int i = 0; i < 5; ++i) // Newton: ninv = m^-1 mod 2^64
            ninv *= 2 - m * ninv;
        ninv = ~ninv + 1; // -m^-1 mod 2^64
        r2 = static_cast<std::uint64_t>((unsigned __int128)(~0ull % m + 1) * (~0ull % m + 1) % m);
    }

    std::uint64_t reduce(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv;
        std::uint64_t r = static_cast<std::uint64_t>((t + (unsigned __int128)m * mod) >> 64);
        return r >= mod ? r - mod : r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return reduce((unsigned __int128)a * b);
    }
    std::uint64_t to(std::uint64_t x) const { return mul(x % mod, r2); }
    std::uint64_t from(std::uint64_t x) const { return reduce(x); }
    std::uint64_t pow(std::uint64_t a_mont, std::uint64_t e) const {
        std::uint64_t r = to(1);
        while (e) {
            if (e & 1)
                r = mul(r, a_mont);
            a_mont = mul(a_mont, a_mont);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + mod - b;
    }
};

} // namespace

bool is_prime_u64(std::uint64_t x) {
    if (x < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull})
        if (x % p == 0)
            return x == p;
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witnesses for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t y = powmod(a, d, x);
        if (y == 1 || y == x - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> rank_check_primes(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 60, (1ull << 61) - 1);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        std::uint64_t candidate = dist(gen) | 1;
        if (is_prime_u64(candidate) &&
            std::find(primes.begin(), primes.end(), candidate) == primes.end())
            primes.push_back(candidate);
    }
    return primes;
}

int rank_mod(const SymmetricIntMatrix& m, std::uint64_t p, bool parallel) {
    const int n = m.order;
    Montgomery mont(p);
    std::vector<std::uint64_t> a(std::size_t(n) * n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t e = m.entries[i];
        std::uint64_t r = e >= 0 ? std::uint64_t(e) % p : p - (std::uint64_t(-e) % p);
        a[i] = mont.to(r == p ? 0 : r);
    }

    // Row-index indirection avoids moving whole rows when pivoting.
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i)
        rows[i] = i;

    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (a[std::size_t(rows[i]) * n + col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t* prow = &a[std::size_t(rows[rank]) * n];
        const std::uint64_t inv = mont.pow(prow[col], p - 2);
        const std::int64_t lo = rank + 1;
#pragma omp parallel for schedule(static) if (parallel && n - lo > 64)
        for (std::int64_t i = lo; i < n; ++i) {
            std::uint64_t* row = &a[std::size_t(rows[i]) * n];
            if (row[col] == 0)
                continue;
            std::uint64_t f = mont.mul(row[col], inv);
            for (int j = col; j < n; ++j)
                row[j] = mont.sub(row[j], mont.mul(f, prow[j]));
        }
        ++rank;
    }
    return rank;
}

int exact_rank(const SymmetricIntMatrix& m, std::uint64_t seed) {
    int best = 0;
    for (std::uint64_t p : rank_check_primes(seed))
        best = std::max(best, rank_mod(m, p));
    return best;
}

int exact_eigen_multiplicity(const SymmetricIntMatrix& m, std::int64_t lambda,
                             std::uint64_t seed) {
    return m.order - exact_rank(m.shifted(lambda), seed);
}

bool is_singular(const SymmetricIntMatrix& m, std::uint64_t seed) {
    return exact_rank(m, seed) < m.order;
}

} // namespace tcg
