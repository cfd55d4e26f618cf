#pragma once

// Brute-force ground truth. For each admissible A, q = 5/P - 1/A and every B
// with 1/q < B <= 2/q is tried; C = 1/(q - 1/B) is accepted only when it is an
// exact integer. This is the reference the constructive searches are audited
// against, not a production path.

#include <vector>

#include "serp/solution.hpp"

namespace serp {

struct OracleEnumeration {
    Integer P;
    std::vector<Solution> solutions;  // lexicographic by (A, B, C)
    bool distinct_only = true;
};

/// Every triple A <= B <= C (A < B < C when distinct_only) with
/// 5/P = 1/A + 1/B + 1/C. Solutions are tagged by their multiplicity pattern
/// (ED1 for one multiple of P, ED2 for two); anything else is tagged Explicit.
/// Throws NotPrime for composite P.
enum class OracleArithmetic { Auto, Wide };

OracleEnumeration enumerate_all_solutions(const Integer& P, bool distinct_only,
                                          OracleArithmetic arith = OracleArithmetic::Auto);

/// Whether a triple with distinct denominators exists.
bool existence_check(const Integer& P);

}  // namespace serp
