#include "serp/ed2.hpp"

#include <cmath>

namespace serp {

namespace {

bool is4mod5(const Integer& x) { return mpz_fdiv_ui(x.get_mpz_t(), 5) == 4; }

}  // namespace

std::vector<Ed2Witness> ed2_search(const Integer& P, const Integer& delta_max) {
    // the kernel itself only needs 5 not dividing P; tables use it at P = 73 too
    if (mpz_fdiv_ui(P.get_mpz_t(), 5) == 0)
        throw Error(Errc::WrongResidue, "ED2 search needs P prime to 5, got " + P.get_str());
    std::vector<Ed2Witness> out;
    for (Integer delta = 1; delta <= delta_max; ++delta) {
        const Integer N = 5 * P * delta + 1;
        for (const Integer& r : divisors(N)) {
            if (r * r > N) break;
            if (!is4mod5(r)) continue;
            Integer s = N / r;
            if (!is4mod5(s)) throw Error(Errc::KernelViolation, "s != 4 (mod 5) for r = 4 (mod 5)");
            Integer b = (r + 1) / 5;
            Integer c = (s + 1) / 5;
            if (b == c) continue;
            const Integer bc = b * c;
            if (!divides(delta, bc)) continue;
            out.push_back({P, delta, std::move(b), std::move(c), r, std::move(s), bc / delta});
        }
    }
    return out;
}

std::optional<Ed2Witness> ed2_from_pair(const Integer& P, Integer b, Integer c) {
    if (b < 1 || c < 1) return std::nullopt;
    if (b > c) std::swap(b, c);
    const Integer r = 5 * b - 1;
    const Integer s = 5 * c - 1;
    const Integer t = r * s - 1;
    if (!divides(5 * P, t)) return std::nullopt;
    Integer delta = t / (5 * P);
    if (delta < 1 || !divides(delta, b * c)) return std::nullopt;
    Integer A = b * c / delta;
    return Ed2Witness{P, std::move(delta), std::move(b), std::move(c), r, s, std::move(A)};
}

std::optional<std::string> ed2_violation(const Ed2Witness& w) {
    if (w.delta < 1 || w.b < 1 || w.c < 1) return "non-positive parameter";
    if (w.r != 5 * w.b - 1 || w.s != 5 * w.c - 1) return "r, s do not match 5b-1, 5c-1";
    if (w.r * w.s != 5 * w.P * w.delta + 1) return "r*s != 5*P*delta + 1";
    if (5 * w.b * w.c - w.b - w.c != w.P * w.delta) return "5bc - b - c != P*delta";
    if (!divides(w.delta, w.b * w.c)) return "delta does not divide bc";
    if (w.A * w.delta != w.b * w.c) return "A != bc/delta";
    if (w.b >= w.c) return "requires b < c";
    if (w.A > w.b * w.P) return "A > bP";
    return std::nullopt;
}

Solution ed2_reconstruct(const Ed2Witness& w) {
    if (auto why = ed2_violation(w)) throw Error(Errc::KernelViolation, *why);
    return make_solution(w.P, w.A, w.b * w.P, w.c * w.P, SolutionClass::ED2);
}

std::optional<Solution> ed2_case_a(const Integer& P, const Integer& delta, std::span<const Integer> S) {
    const Integer N = 5 * P * delta + 1;
    for (const Integer& r : S) {
        if (sgn(r) <= 0 || !divides(r, N)) continue;
        const Integer s = N / r;
        if (!is4mod5(s)) continue;
        Integer b = (r + 1) / 5;
        Integer c = (s + 1) / 5;
        if (!divides(delta, b * c)) continue;
        const Integer A = b * c / delta;
        if (!(A <= b * P && b * P < c * P)) std::swap(b, c);
        return make_solution(P, A, b * P, c * P, SolutionClass::ED2);
    }
    return std::nullopt;
}

NormalizedEd2 ed2_normalize(const Ed2Witness& w) {
    NormalizedEd2 n;
    n.w = w;
    n.g = gcd(w.b, w.c);
    n.bprime = w.b / n.g;
    n.cprime = w.c / n.g;
    auto split = squarefree_split(w.delta);
    n.alpha = std::move(split.alpha);
    n.dprime = std::move(split.dprime);
    n.m = 5 * w.A - w.P;
    n.canonical = n.g == n.alpha * n.dprime && n.bprime + n.cprime == n.m * n.dprime &&
                  w.A == n.alpha * n.bprime * n.cprime;
    return n;
}

bool ed2_backtest(const NormalizedEd2& n, const Integer& P) {
    const Ed2Witness& w = n.w;
    if (!is4mod5(5 * w.b - 1) || !is4mod5(5 * w.c - 1)) return false;
    if (w.delta < 1 || !divides(w.delta, w.b * w.c)) return false;
    if (gcd(n.bprime, n.cprime) != 1) return false;
    if (n.bprime + n.cprime != n.m * n.dprime) return false;
    if (w.A != n.alpha * n.bprime * n.cprime) return false;
    if (w.A * w.delta != w.b * w.c) return false;
    if (!(P < 5 * w.A && 5 * w.A < 3 * P)) return false;
    return w.b != w.c;
}

Integer default_delta_max(const Integer& P) {
    const double l = std::log(P.get_d());
    return Integer(static_cast<unsigned long>(std::max(1.0, std::ceil(l * l * l))));
}

}  // namespace serp
