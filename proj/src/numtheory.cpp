#include "goldbach/numtheory.hpp"

#include <cmath>

namespace goldbach::numtheory {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong-probable-prime round. n-1 = d * 2^s with d odd.
bool sprp(std::uint64_t n, std::uint64_t d, int s, std::uint64_t witness) {
    std::uint64_t x = powmod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Sufficient for all n < 2^64 (Sorenson & Webster).
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t w : kWitnesses) {
        if (!sprp(n, d, s, w % n)) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    constexpr std::uint64_t kMaxBound = 100'000'000;
    if (bound > kMaxBound)
        throw std::invalid_argument("primes_up_to: bound exceeds sieve capacity 1e8");
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

PartitionReport goldbach_partitions(std::uint64_t even, std::uint64_t p_small_max) {
    if (even < 4 || even % 2 != 0)
        throw std::domain_error("goldbach_partitions: input must be even and >= 4");
    PartitionReport report;
    report.even = even;
    const std::uint64_t cap = std::min<std::uint64_t>(p_small_max, even / 2);
    for (std::uint64_t p = 2; p <= cap; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime(p)) continue;
        if (is_prime(even - p)) {
            report.partitions.emplace_back(p, even - p);
            if (!report.first_prime) report.first_prime = p;
        }
    }
    return report;
}

std::map<std::uint64_t, std::optional<std::uint64_t>> classical_sieve(
    const std::vector<std::uint64_t>& evens, std::uint64_t p_small_max) {
    std::map<std::uint64_t, std::optional<std::uint64_t>> result;
    for (std::uint64_t even : evens) {
        if (even < 4 || even % 2 != 0)
            throw std::domain_error("classical_sieve: inputs must be even and >= 4");
        std::optional<std::uint64_t> hit;
        for (std::uint64_t p = 2; p <= std::min(p_small_max, even / 2);
             p = (p == 2 ? 3 : p + 2)) {
            if (!is_prime(p)) continue;
            if (is_prime(even - p)) {
                hit = p;
                break;
            }
        }
        result[even] = hit;
    }
    return result;
}

double prime_budget_typical(std::uint64_t n) {
    return std::log(static_cast<double>(n));
}

double prime_budget_exceptional(std::uint64_t n) {
    const double l = std::log(static_cast<double>(n));
    return l * l;
}

}  // namespace goldbach::numtheory
