#pragma once

#include <array>

#include "serp/solution.hpp"

namespace serp {

/// Closed-form triple for a prime P with P mod 5 in {2, 3, 4}. The result may
/// repeat a denominator (residues 3 and 4 give B == C).
Solution decompose_explicit(const Integer& P);

/// Rewrites a repeated pair of denominators into two distinct ones using
///   2/n = 1/((n+1)/2) + 1/(n(n+1)/2)   (n odd)
///   2/n = 1/(n/2+1) + 1/((n/2)(n/2+1))  (n even)
/// Strict input is returned unchanged.
Solution repair_distinct(const Solution& sol);

/// Same rewrite on a bare triple; the sum of unit fractions is preserved.
/// Throws IrreparableCollision if a second rewrite still repeats.
std::array<Integer, 3> repair_triple(std::array<Integer, 3> d);

}  // namespace serp
