#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace goldbach::numtheory {

/// A Goldbach partition report for one even number: every pair
/// (p_small, p_large) with p_small <= p_small_max, p_small + p_large = even,
/// both prime. Pairs are sorted ascending by p_small.
struct PartitionReport {
    std::uint64_t even = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> partitions;
    std::optional<std::uint64_t> first_prime;  // smallest p_small, if any
};

/// Deterministic primality for the full 64-bit range.
/// Miller-Rabin with the 12-witness set {2,...,37}; no probabilistic error.
bool is_prime(std::uint64_t n);

/// All primes <= bound, ascending. Simple sieve; bound capped at 1e8.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// All partitions (p, even-p) with p prime <= p_small_max and even-p prime.
/// Throws std::domain_error for odd input or even < 4.
PartitionReport goldbach_partitions(std::uint64_t even, std::uint64_t p_small_max);

/// The sieve of the search campaign: for each even, the smallest prime p
/// (p=2 only ever fires for N=4) with N-p prime, scanning ascending and
/// stopping at p_small_max. Evens with no hit map to an empty optional.
std::map<std::uint64_t, std::optional<std::uint64_t>> classical_sieve(
    const std::vector<std::uint64_t>& evens, std::uint64_t p_small_max);

/// Advisory estimate of how many small primes a typical even needs: ln(N).
double prime_budget_typical(std::uint64_t n);

/// Advisory estimate for the exceptional evens: ln^2(N).
double prime_budget_exceptional(std::uint64_t n);

}  // namespace goldbach::numtheory
