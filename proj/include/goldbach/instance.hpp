#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbach {

/// No even in the sample is partitioned by the drive prime.
struct NoMatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two or more evens match the drive prime: the single-entry Grover
/// precondition fails for this sample/prime combination.
struct MultipleMatchesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shifted levels would exceed the simulable magnitude bound.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The searchable problem instance. Computational space = the even sample,
/// auxiliary space = the table of candidate large primes. Levels are exact
/// signed integers in units of U_0, relative to the offset C.
struct GoldbachInstance {
    std::uint64_t base = 0;                  // N_0
    std::vector<std::uint64_t> evens;        // N_0 + 2k, ascending
    std::uint64_t p_small_max = 0;
    std::uint64_t p_drive = 0;               // p^(I)
    std::vector<std::uint64_t> aux_primes;   // candidate p^(II), ascending
    std::uint64_t energy_offset = 0;         // C
    std::vector<std::int64_t> g_levels;      // evens[i] - C
    std::vector<std::int64_t> e_levels;      // aux_primes[j] - C
    std::size_t match_g_index = 0;           // 0-based
    std::size_t match_e_index = 0;           // 0-based
    bool sample_size_warning = false;        // count > ln(base)

    std::size_t size() const { return evens.size(); }        // script-N
    std::size_t aux_size() const { return aux_primes.size(); }
};

/// Maximum |level| after shifting, in units of U_0.
inline constexpr std::int64_t kLevelFeasibilityBound = 1'000'000;

/// Builds the instance for a contiguous even sample base+2, ..., base+2*count.
/// The aux table collects every prime q = N - p over all sample evens N and
/// all primes 3 <= p <= p_small_max. Throws NoMatchError / MultipleMatchesError
/// when the drive prime does not single out exactly one even.
GoldbachInstance build_instance(std::uint64_t base, std::size_t count,
                                std::uint64_t p_small_max, std::uint64_t p_drive);

/// Same, but over an explicit (possibly non-contiguous) even sample.
/// Used by the sieve campaign after earlier primes removed part of the set.
GoldbachInstance build_instance_from_evens(std::uint64_t base,
                                           std::vector<std::uint64_t> evens,
                                           std::uint64_t p_small_max,
                                           std::uint64_t p_drive);

/// Re-bases the level ladder at offset C. A uniform diagonal shift is a
/// global phase, so populations of any subsequent evolution are unchanged.
GoldbachInstance shift_energies(const GoldbachInstance& inst, std::uint64_t C);

/// Instance document, integers rendered as decimal strings for 64-bit
/// exactness. Round-trips through parse_instance.
std::string serialize_instance(const GoldbachInstance& inst);
GoldbachInstance parse_instance(const std::string& text);

}  // namespace goldbach
