#pragma once

#include <cstdint>
#include <vector>

namespace serp {

/// All primes <= x, by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Primes p <= x with p = residue (mod modulus), ascending.
///
/// Sieves the progression residue + k*modulus directly: for every sieving
/// prime q <= sqrt(x) not dividing the modulus, the members divisible by q
/// form a progression in k with step q. Blocks of k are processed in turn so
/// memory stays bounded by the segment size, not by x.
std::vector<std::uint64_t> progression_primes(std::uint64_t residue, std::uint64_t modulus, std::uint64_t x);

}  // namespace serp
