#include "tcg/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace tcg {

PrimeTables PrimeTables::build(std::uint32_t n) {
    if (n < 1)
        throw std::invalid_argument("PrimeTables::build: n must be >= 1");
    if (n > kMaxSieveLimit)
        throw std::invalid_argument("PrimeTables::build: limit " + std::to_string(n) +
                                    " exceeds sieve cap " + std::to_string(kMaxSieveLimit));

    PrimeTables t;
    t.limit = n;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (composite[p])
            continue;
        for (std::uint64_t c = p * p; c <= n; c += p)
            composite[c] = true;
    }
    t.pi_of.assign(n + 1, 0);
    std::uint32_t count = 0;
    for (std::uint32_t m = 2; m <= n; ++m) {
        if (!composite[m]) {
            t.primes.push_back(m);
            ++count;
        }
        t.pi_of[m] = count;
    }
    return t;
}

std::uint32_t PrimeTables::pi(std::uint32_t m) const {
    if (m > limit)
        throw std::out_of_range("PrimeTables::pi: " + std::to_string(m) + " > limit " +
                                std::to_string(limit));
    return pi_of[m];
}

std::vector<std::uint32_t> dominating_primes(const PrimeTables& tables, std::uint32_t n) {
    if (n > tables.limit)
        throw std::out_of_range("dominating_primes: n > tables.limit");
    std::vector<std::uint32_t> d;
    for (std::uint32_t p : tables.primes) {
        if (p > n)
            break;
        if (2ull * p > n)
            d.push_back(p);
    }
    return d;
}

PrimorialInfo largest_primorial_leq(std::uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("largest_primorial_leq: no primorial <= n for n < 2");
    // Primorials outgrow any 64-bit n after 15 primes, so a small sieve is enough.
    PrimeTables small = PrimeTables::build(64);
    PrimorialInfo info;
    std::uint64_t value = 1;
    for (std::uint32_t p : small.primes) {
        std::uint64_t next;
        if (__builtin_mul_overflow(value, static_cast<std::uint64_t>(p), &next) || next > n)
            break;
        value = next;
        ++info.k;
    }
    info.value = value;
    return info;
}

std::vector<std::uint32_t> coprime_set(std::uint32_t n, std::uint64_t m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("coprime_set: n and m must be >= 1");
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 1; x <= n; ++x)
        if (gcd(x, m) == 1)
            out.push_back(x);
    return out;
}

std::map<std::uint32_t, std::uint32_t> prime_power_exponents(const PrimeTables& tables,
                                                             std::uint32_t n) {
    if (n < 2)
        throw std::invalid_argument("prime_power_exponents: n must be >= 2");
    if (n > tables.limit)
        throw std::out_of_range("prime_power_exponents: n > tables.limit");
    std::map<std::uint32_t, std::uint32_t> k;
    for (std::uint32_t p : tables.primes) {
        if (p > n)
            break;
        // Largest k with p^k <= n, by overflow-checked repeated multiplication.
        std::uint32_t e = 1;
        std::uint64_t power = p;
        std::uint64_t next;
        while (!__builtin_mul_overflow(power, static_cast<std::uint64_t>(p), &next) &&
               next <= n) {
            power = next;
            ++e;
        }
        k[p] = e;
    }
    return k;
}

std::uint32_t nullity_lower_bound(const PrimeTables& tables, std::uint32_t n) {
    auto exps = prime_power_exponents(tables, n);
    std::uint32_t sum = 0;
    for (const auto& [p, e] : exps)
        sum += e;
    return sum - static_cast<std::uint32_t>(exps.size());
}

} // namespace tcg
