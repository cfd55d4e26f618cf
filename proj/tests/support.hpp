#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "serp/exact_arith.hpp"

namespace testing {

// Code of the serp::Error thrown by f, if any.
template <class F>
std::optional<serp::Errc> thrown(F&& f) {
    try {
        f();
    } catch (const serp::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed5eedULL);
    return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Slow but obviously correct references.
inline bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

inline serp::Integer I(std::uint64_t v) { return serp::from_u64(v); }

}  // namespace testing
