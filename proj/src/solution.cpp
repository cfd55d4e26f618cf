#include "serp/solution.hpp"

#include <algorithm>
#include <array>

namespace serp {

const char* to_string(SolutionClass cls) noexcept {
    switch (cls) {
        case SolutionClass::ED1: return "ED1";
        case SolutionClass::ED2: return "ED2";
        case SolutionClass::Explicit: return "Explicit";
    }
    return "?";
}

bool verify_solution(const Integer& P, const Integer& A, const Integer& B, const Integer& C) {
    if (P < 1 || A < 1 || B < 1 || C < 1) return false;
    return unit(A) + unit(B) + unit(C) == Rational(5, P);
}

Solution make_solution(const Integer& P, Integer x, Integer y, Integer z, SolutionClass cls) {
    std::array<Integer, 3> d{std::move(x), std::move(y), std::move(z)};
    std::sort(d.begin(), d.end());
    if (!verify_solution(P, d[0], d[1], d[2]))
        throw Error(Errc::InvalidSolution, "1/" + d[0].get_str() + " + 1/" + d[1].get_str() + " + 1/" + d[2].get_str() +
                                               " != 5/" + P.get_str());
    Solution s;
    s.P = P;
    s.A = std::move(d[0]);
    s.B = std::move(d[1]);
    s.C = std::move(d[2]);
    s.strict = s.A < s.B && s.B < s.C;
    s.cls = cls;
    return s;
}

MultiplicityClass classify_solution(const Solution& sol) {
    if (sol.P == 2 || sol.P == 3 || sol.P == 5)
        throw Error(Errc::UnsupportedPrime, "classification needs P > 3 and P != 5, got " + sol.P.get_str());
    if (!verify_solution(sol.P, sol.A, sol.B, sol.C) || sol.A > sol.B || sol.B > sol.C)
        throw Error(Errc::InvalidSolution, "classify_solution on an unverified triple");
    if (divides(sol.P, sol.A)) throw Error(Errc::ClassificationViolation, "P divides the minimal denominator");
    MultiplicityClass m;
    m.at_B = divides(sol.P, sol.B);
    m.at_C = divides(sol.P, sol.C);
    m.count = int(m.at_B) + int(m.at_C);
    if (m.count == 0) throw Error(Errc::ClassificationViolation, "no denominator divisible by P");
    return m;
}

SolutionClass multiplicity_class(const Solution& sol) {
    return classify_solution(sol).count == 1 ? SolutionClass::ED1 : SolutionClass::ED2;
}

DenominatorRange min_denominator_bounds(const Integer& P) {
    // P < 5A  <=>  A >= floor(P/5) + 1;  5A < 3P  <=>  A <= ceil(3P/5) - 1.
    Integer lo = P / 5 + 1;
    Integer hi;
    mpz_cdiv_q_ui(hi.get_mpz_t(), Integer(3 * P).get_mpz_t(), 5);
    return {lo, hi - 1};
}

}  // namespace serp
