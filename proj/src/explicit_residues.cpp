#include "serp/explicit_residues.hpp"

#include <algorithm>

namespace serp {

Solution decompose_explicit(const Integer& P) {
    const unsigned long residue = mpz_fdiv_ui(P.get_mpz_t(), 5);
    if (residue == 0 || residue == 1)
        throw Error(Errc::WrongResidue, "closed forms cover P mod 5 in {2,3,4}, got P = " + P.get_str());
    const Integer pp = (P - residue) / 5;  // P = 5P' + residue
    const Integer a = pp + 1;
    switch (residue) {
        case 4: return make_solution(P, a, 2 * a * P, 2 * a * P, SolutionClass::Explicit);
        case 3: return make_solution(P, a, a * P, a * P, SolutionClass::Explicit);
        default:
            if (mpz_odd_p(a.get_mpz_t()))
                throw Error(Errc::ParityViolation, "P' must be odd for P = 5P' + 2, got P = " + P.get_str());
            return make_solution(P, a, a / 2 * P, a * P, SolutionClass::Explicit);
    }
}

namespace {

// Two distinct denominators whose unit fractions sum to 2/n.
std::pair<Integer, Integer> split_pair(const Integer& n) {
    if (mpz_odd_p(n.get_mpz_t())) {
        const Integer h = (n + 1) / 2;
        return {h, n * h};
    }
    const Integer k = n / 2;
    return {k + 1, k * (k + 1)};
}

bool has_repeat(const std::array<Integer, 3>& d) { return d[0] == d[1] || d[1] == d[2]; }

std::array<Integer, 3> split_repeat(const std::array<Integer, 3>& d) {
    // d is sorted; the repeated pair is either (0,1) or (1,2).
    const bool front = d[0] == d[1];
    const Integer& pair = front ? d[0] : d[1];
    const Integer& other = front ? d[2] : d[0];
    auto [x, y] = split_pair(pair);
    std::array<Integer, 3> out{other, std::move(x), std::move(y)};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::array<Integer, 3> repair_triple(std::array<Integer, 3> d) {
    std::sort(d.begin(), d.end());
    if (!has_repeat(d)) return d;
    if (d[0] == d[2]) throw Error(Errc::IrreparableCollision, "all three denominators equal");
    d = split_repeat(d);
    if (!has_repeat(d)) return d;
    // The new denominator hit the remaining one; split that collision instead.
    d = split_repeat(d);
    if (has_repeat(d)) throw Error(Errc::IrreparableCollision, "both rewrites collide");
    return d;
}

Solution repair_distinct(const Solution& sol) {
    if (sol.strict) return sol;
    auto d = repair_triple({sol.A, sol.B, sol.C});
    return make_solution(sol.P, d[0], d[1], d[2], sol.cls);
}

}  // namespace serp
