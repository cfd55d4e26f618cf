#include "serp/bridge.hpp"

namespace serp {

BridgeResult<Ed1Witness> convolve_ed2_to_ed1(const Ed2Witness& w) {
    const Integer s = 5 * w.c - 1;
    if (!divides(w.P, s)) return PreconditionFailed{"P does not divide 5c-1"};
    if (sgn(w.delta) <= 0 || !divides(w.delta, w.b * w.c)) return PreconditionFailed{"delta does not divide bc"};
    const Integer gamma = s / w.P;
    const Integer A = w.b * w.c / w.delta;
    const Integer B = w.b * w.P;
    Ed1Witness out{w.P, gamma, w.c, gamma * A - w.c, gamma * B - w.c};
    if (out.u * out.v != out.c * out.c) return PreconditionFailed{"u*v != c^2"};
    if (auto why = ed1_violation(out)) return PreconditionFailed{"ED1 invariant: " + *why};
    return out;
}

BridgeResult<Ed2Witness> anticonvolve_ed1_to_ed2(const Ed1Quadruple& q, const Integer& P) {
    if (sgn(q.gamma) <= 0) return PreconditionFailed{"gamma must be positive"};
    if (!divides(q.gamma, q.u + q.c)) return PreconditionFailed{"gamma does not divide u+c"};
    if (!divides(q.gamma * P, q.v + q.c)) return PreconditionFailed{"gamma*P does not divide v+c"};
    const Integer A = (q.u + q.c) / q.gamma;
    const Integer b = (q.v + q.c) / (q.gamma * P);
    if (sgn(A) <= 0 || sgn(b) <= 0) return PreconditionFailed{"non-positive A or b"};
    if (!divides(A, b * q.c)) return PreconditionFailed{"A does not divide bc"};
    const Integer delta = b * q.c / A;
    Ed2Witness out{P, delta, b, q.c, 5 * b - 1, 5 * q.c - 1, A};
    if (out.b > out.c) {
        std::swap(out.b, out.c);
        std::swap(out.r, out.s);
    }
    if (auto why = ed2_violation(out)) return PreconditionFailed{"ED2 kernel: " + *why};
    return out;
}

}  // namespace serp
