#include "serp/prime_sieve.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "serp/exact_arith.hpp"

namespace serp {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;
constexpr std::uint64_t kMaxX = std::uint64_t{1} << 62;

std::uint64_t isqrt_u64(std::uint64_t n) {
    return to_u64(isqrt(from_u64(n)));
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

// Inverse of q modulo prime p, q not divisible by p.
std::uint64_t inverse_mod_prime(std::uint64_t q, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(q % p);
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    return progression_primes(0, 1, x);
}

std::vector<std::uint64_t> progression_primes(std::uint64_t residue, std::uint64_t modulus, std::uint64_t x) {
    if (modulus == 0) throw Error(Errc::OutOfRange, "modulus must be positive");
    if (x > kMaxX) throw Error(Errc::OutOfRange, "scan limit above 2^62");
    const std::uint64_t a = residue % modulus;
    const std::uint64_t q = modulus;
    std::vector<std::uint64_t> out;
    if (a > x) return out;

    if (std::gcd(a, q) != 1) {
        // Every member shares a factor with q; only a itself can be prime.
        if (is_prime(a)) out.push_back(a);
        return out;
    }

    const std::uint64_t kmax = (x - a) / q;  // members a + k*q, 0 <= k <= kmax
    const std::vector<std::uint64_t> base = small_primes(isqrt_u64(x));

    // next[i]: first k in the current or a later block at which base[i] must be struck.
    std::vector<std::uint64_t> next(base.size(), UINT64_MAX);
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::uint64_t p = base[i];
        if (q % p == 0) continue;
        const std::uint64_t k0 = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(p - a % p) % p * inverse_mod_prime(q, p) % p);
        // Start at the first member >= p^2 in that residue class of k.
        const std::uint64_t p2 = p * p;
        std::uint64_t k = k0;
        if (a + k * q < p2) {
            const std::uint64_t need = (p2 - a + q - 1) / q;  // smallest k with a + k*q >= p^2
            k = k0 + (need > k0 ? (need - k0 + p - 1) / p * p : 0);
        }
        next[i] = k;
    }

    std::vector<char> composite(kSegment);
    for (std::uint64_t lo = 0; lo <= kmax; lo += kSegment) {
        const std::uint64_t hi = std::min(kmax, lo + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::uint64_t k = next[i];
            if (k == UINT64_MAX) continue;
            const std::uint64_t p = base[i];
            for (; k <= hi; k += p) composite[k - lo] = 1;
            next[i] = k;
        }
        for (std::uint64_t k = lo; k <= hi; ++k) {
            const std::uint64_t n = a + k * q;
            if (!composite[k - lo] && n >= 2) out.push_back(n);
        }
    }
    return out;
}

}  // namespace serp
