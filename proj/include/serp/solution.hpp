#pragma once

#include <string>

#include "serp/exact_arith.hpp"

namespace serp {

enum class SolutionClass { ED1, ED2, Explicit };

const char* to_string(SolutionClass cls) noexcept;

/// A verified triple with 5/P = 1/A + 1/B + 1/C and A <= B <= C.
///
/// Construct through make_solution, which sorts the denominators and checks
/// the identity exactly; a Solution that exists is always valid.
struct Solution {
    Integer P;
    Integer A, B, C;
    bool strict = false;  // A < B < C
    SolutionClass cls = SolutionClass::Explicit;

    bool operator==(const Solution&) const = default;
};

bool verify_solution(const Integer& P, const Integer& A, const Integer& B, const Integer& C);

/// Sorts (x, y, z), verifies, and tags the result. Throws InvalidSolution.
Solution make_solution(const Integer& P, Integer x, Integer y, Integer z, SolutionClass cls);

/// Which of B and C are multiples of P. A never is.
struct MultiplicityClass {
    int count = 0;
    bool at_B = false;
    bool at_C = false;
    bool operator==(const MultiplicityClass&) const = default;
};

MultiplicityClass classify_solution(const Solution& sol);

/// Class implied by the multiplicity pattern (ED1 for one multiple, ED2 for two).
SolutionClass multiplicity_class(const Solution& sol);

struct DenominatorRange {
    Integer lo, hi;  // inclusive
    bool contains(const Integer& a) const { return lo <= a && a <= hi; }
};

/// All A with P < 5A < 3P.
DenominatorRange min_denominator_bounds(const Integer& P);

}  // namespace serp
