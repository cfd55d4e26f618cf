#pragma once

// One-multiple construction: C = cP with 5c - 1 = gamma * P, and the kernel
//   (gamma*A - c)(gamma*B - c) = c^2
// solved by divisor pairs u * v = c^2.

#include <optional>
#include <string>
#include <vector>

#include "serp/solution.hpp"

namespace serp {

struct Ed1Candidate {
    Integer gamma;
    Integer c;
    bool operator==(const Ed1Candidate&) const = default;
};

struct Ed1Witness {
    Integer P;
    Integer gamma;
    Integer c;
    Integer u;
    Integer v;
    bool operator==(const Ed1Witness&) const = default;
};

/// gamma = 4, 9, 14, ... <= gamma_max with c = (gamma*P + 1)/5.
std::vector<Ed1Candidate> ed1_candidates(const Integer& P, const Integer& gamma_max);

/// Witnesses ordered by gamma, then u. Pairs with u == v are dropped.
std::vector<Ed1Witness> ed1_search(const Integer& P, const Integer& gamma_max);

/// First witness invariant that fails, if any.
std::optional<std::string> ed1_violation(const Ed1Witness& w);

/// A = (u+c)/gamma, B = (v+c)/gamma, C = cP. Throws KernelViolation.
Solution ed1_reconstruct(const Ed1Witness& w);

/// 5 * ceil((ln P)^3).
Integer default_gamma_max(const Integer& P);

}  // namespace serp
