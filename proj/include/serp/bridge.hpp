#pragma once

// Transfer formulas between the two constructions:
//   ED2 -> ED1:  gamma = (5c-1)/P, u = gamma*A - c, v = gamma*B - c
//   ED1 -> ED2:  A = (u+c)/gamma, b = (v+c)/(gamma*P), delta = bc/A
// Both are partial. Every precondition is checked and a mapped result is
// re-verified against the target construction before it is returned.
//
// For any kernel-valid ED2 witness (5b-1)(5c-1) = 1 (mod P), so P never
// divides 5c-1 and the forward map always fails its precondition.

#include <string>
#include <variant>

#include "serp/ed1.hpp"
#include "serp/ed2.hpp"

namespace serp {

struct PreconditionFailed {
    std::string reason;
    bool operator==(const PreconditionFailed&) const = default;
};

template <class Target>
using BridgeResult = std::variant<Target, PreconditionFailed>;

struct Ed1Quadruple {
    Integer gamma, c, u, v;
};

BridgeResult<Ed1Witness> convolve_ed2_to_ed1(const Ed2Witness& w);
BridgeResult<Ed2Witness> anticonvolve_ed1_to_ed2(const Ed1Quadruple& q, const Integer& P);

template <class Target>
bool mapped(const BridgeResult<Target>& r) {
    return std::holds_alternative<Target>(r);
}

}  // namespace serp
