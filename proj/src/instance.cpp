#include "goldbach/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "goldbach/numtheory.hpp"

namespace goldbach {

namespace {

std::int64_t signed_diff(std::uint64_t a, std::uint64_t b) {
    return a >= b ? static_cast<std::int64_t>(a - b)
                  : -static_cast<std::int64_t>(b - a);
}

void check_feasibility(const GoldbachInstance& inst) {
    for (auto lv : inst.g_levels)
        if (std::llabs(lv) > kLevelFeasibilityBound)
            throw FeasibilityError("g-level " + std::to_string(lv) +
                                   " exceeds feasibility bound");
    for (auto lv : inst.e_levels)
        if (std::llabs(lv) > kLevelFeasibilityBound)
            throw FeasibilityError("e-level " + std::to_string(lv) +
                                   " exceeds feasibility bound");
}

}  // namespace

GoldbachInstance build_instance_from_evens(std::uint64_t base,
                                           std::vector<std::uint64_t> evens,
                                           std::uint64_t p_small_max,
                                           std::uint64_t p_drive) {
    using numtheory::is_prime;
    if (evens.size() < 2)
        throw std::invalid_argument("build_instance: need at least 2 evens");
    if (p_drive < 3 || !is_prime(p_drive))
        throw std::invalid_argument("build_instance: p_drive must be an odd prime");
    if (p_drive > p_small_max)
        throw std::invalid_argument("build_instance: p_drive exceeds p_small_max");
    for (std::size_t i = 0; i < evens.size(); ++i) {
        if (evens[i] % 2 != 0 || evens[i] <= base)
            throw std::invalid_argument("build_instance: evens must be even and > base");
        if (i > 0 && evens[i] <= evens[i - 1])
            throw std::invalid_argument("build_instance: evens must be strictly ascending");
    }

    GoldbachInstance inst;
    inst.base = base;
    inst.evens = std::move(evens);
    inst.p_small_max = p_small_max;
    inst.p_drive = p_drive;
    inst.energy_offset = base;

    // Aux table: every prime q = N - p over the sample, for all odd primes
    // p <= p_small_max. Deduplicated, ascending.
    std::set<std::uint64_t> aux;
    for (std::uint64_t p = 3; p <= p_small_max; p += 2) {
        if (!is_prime(p)) continue;
        for (std::uint64_t n : inst.evens) {
            if (p >= n) continue;
            const std::uint64_t q = n - p;
            if (is_prime(q)) aux.insert(q);
        }
    }
    inst.aux_primes.assign(aux.begin(), aux.end());

    // The drive prime must single out exactly one even.
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < inst.evens.size(); ++i)
        if (inst.evens[i] > p_drive && is_prime(inst.evens[i] - p_drive))
            matches.push_back(i);
    if (matches.empty())
        throw NoMatchError("no even in the sample is partitioned by p_drive=" +
                           std::to_string(p_drive));
    if (matches.size() > 1)
        throw MultipleMatchesError(std::to_string(matches.size()) +
                                   " evens match p_drive=" + std::to_string(p_drive));
    inst.match_g_index = matches.front();

    const std::uint64_t q_match = inst.evens[inst.match_g_index] - p_drive;
    const auto it = std::lower_bound(inst.aux_primes.begin(), inst.aux_primes.end(), q_match);
    inst.match_e_index = static_cast<std::size_t>(it - inst.aux_primes.begin());

    for (std::uint64_t n : inst.evens)
        inst.g_levels.push_back(signed_diff(n, inst.energy_offset));
    for (std::uint64_t q : inst.aux_primes)
        inst.e_levels.push_back(signed_diff(q, inst.energy_offset));
    check_feasibility(inst);

    inst.sample_size_warning =
        static_cast<double>(inst.evens.size()) > std::log(static_cast<double>(base));
    return inst;
}

GoldbachInstance build_instance(std::uint64_t base, std::size_t count,
                                std::uint64_t p_small_max, std::uint64_t p_drive) {
    if (base % 2 != 0)
        throw std::invalid_argument("build_instance: base must be even");
    std::vector<std::uint64_t> evens;
    evens.reserve(count);
    for (std::size_t k = 1; k <= count; ++k)
        evens.push_back(base + 2 * static_cast<std::uint64_t>(k));
    return build_instance_from_evens(base, std::move(evens), p_small_max, p_drive);
}

GoldbachInstance shift_energies(const GoldbachInstance& inst, std::uint64_t C) {
    GoldbachInstance shifted = inst;
    shifted.energy_offset = C;
    shifted.g_levels.clear();
    shifted.e_levels.clear();
    for (std::uint64_t n : inst.evens) shifted.g_levels.push_back(signed_diff(n, C));
    for (std::uint64_t q : inst.aux_primes) shifted.e_levels.push_back(signed_diff(q, C));
    check_feasibility(shifted);
    return shifted;
}

std::string serialize_instance(const GoldbachInstance& inst) {
    nlohmann::json j;
    auto dec = [](std::uint64_t v) { return std::to_string(v); };
    j["base"] = dec(inst.base);
    j["p_small_max"] = dec(inst.p_small_max);
    j["p_drive"] = dec(inst.p_drive);
    j["energy_offset"] = dec(inst.energy_offset);
    for (auto n : inst.evens) j["evens"].push_back(dec(n));
    for (auto q : inst.aux_primes) j["aux_primes"].push_back(dec(q));
    for (auto lv : inst.g_levels) j["g_levels"].push_back(std::to_string(lv));
    for (auto lv : inst.e_levels) j["e_levels"].push_back(std::to_string(lv));
    j["match_g_index"] = inst.match_g_index;
    j["match_e_index"] = inst.match_e_index;
    j["sample_size_warning"] = inst.sample_size_warning;
    return j.dump(2) + "\n";
}

GoldbachInstance parse_instance(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GoldbachInstance inst;
    auto u64 = [](const nlohmann::json& v) {
        return static_cast<std::uint64_t>(std::stoull(v.get<std::string>()));
    };
    auto i64 = [](const nlohmann::json& v) {
        return static_cast<std::int64_t>(std::stoll(v.get<std::string>()));
    };
    inst.base = u64(j.at("base"));
    inst.p_small_max = u64(j.at("p_small_max"));
    inst.p_drive = u64(j.at("p_drive"));
    inst.energy_offset = u64(j.at("energy_offset"));
    for (const auto& v : j.at("evens")) inst.evens.push_back(u64(v));
    for (const auto& v : j.at("aux_primes")) inst.aux_primes.push_back(u64(v));
    for (const auto& v : j.at("g_levels")) inst.g_levels.push_back(i64(v));
    for (const auto& v : j.at("e_levels")) inst.e_levels.push_back(i64(v));
    inst.match_g_index = j.at("match_g_index").get<std::size_t>();
    inst.match_e_index = j.at("match_e_index").get<std::size_t>();
    inst.sample_size_warning = j.at("sample_size_warning").get<bool>();
    return inst;
}

}  // namespace goldbach
