#pragma once

// Two-multiple construction: B = bP, C = cP. With r = 5b - 1 and s = 5c - 1,
//   r * s = 5*P*delta + 1,   A = b*c / delta.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serp/solution.hpp"

namespace serp {

struct Ed2Witness {
    Integer P;
    Integer delta;
    Integer b, c;  // b <= c
    Integer r, s;  // 5b - 1, 5c - 1
    Integer A;     // b*c / delta
    bool operator==(const Ed2Witness&) const = default;
};

/// Normalized coordinates: b = g*b', c = g*c', delta = alpha*d'^2, m = 5A - P.
/// `canonical` is set when g = alpha*d', b' + c' = m*d' and A = alpha*b'*c'.
struct NormalizedEd2 {
    Ed2Witness w;
    Integer g;
    Integer bprime, cprime;
    Integer alpha, dprime;
    Integer m;
    bool canonical = false;
    bool operator==(const NormalizedEd2&) const = default;
};

/// Witnesses ordered by delta, then r. Pairs with b == c are dropped.
std::vector<Ed2Witness> ed2_search(const Integer& P, const Integer& delta_max);

/// Witness determined by (b, c) alone, if the kernel admits an integral delta
/// dividing b*c. Orders b <= c.
std::optional<Ed2Witness> ed2_from_pair(const Integer& P, Integer b, Integer c);

std::optional<std::string> ed2_violation(const Ed2Witness& w);

Solution ed2_reconstruct(const Ed2Witness& w);

/// The finite-set procedure: the first r in S dividing N = 5*P*delta + 1 with
/// s = N/r = 4 (mod 5) and delta | b*c gives (A, bP, cP).
std::optional<Solution> ed2_case_a(const Integer& P, const Integer& delta, std::span<const Integer> S);

NormalizedEd2 ed2_normalize(const Ed2Witness& w);

/// Re-validates an assembled row: congruences, delta | bc, gcd(b', c') = 1,
/// b' + c' = m*d', A = alpha*b'*c', A = bc/delta, P < 5A < 3P, b != c.
bool ed2_backtest(const NormalizedEd2& n, const Integer& P);

/// ceil((ln P)^3).
Integer default_delta_max(const Integer& P);

}  // namespace serp
