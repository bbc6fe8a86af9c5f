#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace indset {

inline constexpr std::uint64_t default_omega_budget = 100'000'000;

/// Omega(x) for every x in [0, N] (Omega(0) = Omega(1) = 0), from a
/// smallest-prime-factor sieve: Omega(x) = Omega(x / spf(x)) + 1.
[[nodiscard]] inline std::vector<std::uint8_t> big_omega_table(std::uint64_t N,
                                                               std::uint64_t max_entries = default_omega_budget) {
    if (N > max_entries)
        throw ResourceError("Omega sieve up to " + std::to_string(N) + " exceeds the budget of " +
                            std::to_string(max_entries) + " entries");
    std::vector<std::uint32_t> spf(N + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || i * p > N) break;
            spf[i * p] = p;
        }
    }
    std::vector<std::uint8_t> omega(N + 1, 0);
    for (std::uint64_t i = 2; i <= N; ++i) omega[i] = static_cast<std::uint8_t>(omega[i / spf[i]] + 1);
    return omega;
}

/// |{ x <= N : Omega(x) >= k }|, i.e. the integers up to N that factor as a
/// product of k integers each at least 2.
[[nodiscard]] inline std::uint64_t count_big_omega_at_least(std::uint64_t N, std::uint64_t k,
                                                            std::uint64_t max_entries = default_omega_budget) {
    if (N < 2) throw DomainError("count_big_omega_at_least: N must be at least 2");
    const auto omega = big_omega_table(N, max_entries);
    std::uint64_t count = 0;
    for (std::uint64_t x = 2; x <= N; ++x)
        if (omega[x] >= k) ++count;
    return count;
}

} // namespace indset
