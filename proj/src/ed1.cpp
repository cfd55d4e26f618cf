#include "serp/ed1.hpp"

#include <cmath>

namespace serp {

namespace {

void require_residue_one(const Integer& P) {
    if (mpz_fdiv_ui(P.get_mpz_t(), 5) != 1)
        throw Error(Errc::WrongResidue, "ED1 search needs P = 1 (mod 5), got " + P.get_str());
}

}  // namespace

std::vector<Ed1Candidate> ed1_candidates(const Integer& P, const Integer& gamma_max) {
    require_residue_one(P);
    std::vector<Ed1Candidate> out;
    for (Integer gamma = 4; gamma <= gamma_max; gamma += 5) {
        Integer c = (gamma * P + 1) / 5;
        if (gcd(gamma, c) != 1) throw Error(Errc::KernelViolation, "gcd(gamma, c) != 1");
        out.push_back({gamma, std::move(c)});
    }
    return out;
}

std::vector<Ed1Witness> ed1_search(const Integer& P, const Integer& gamma_max) {
    std::vector<Ed1Witness> out;
    for (const auto& [gamma, c] : ed1_candidates(P, gamma_max)) {
        const Integer target_g = mod(-c, gamma);
        const Integer target_p = mod(-c, P);
        const Integer c2 = c * c;
        for (const Integer& u : divisors_of_square(c)) {
            if (u >= c) break;  // u < v <=> u < c
            if (mod(u, gamma) != target_g) continue;
            Integer v = c2 / u;
            if (mod(v, gamma) != target_g) continue;
            if (mod(u, P) == target_p || mod(v, P) == target_p) continue;
            out.push_back({P, gamma, c, u, std::move(v)});
        }
    }
    return out;
}

std::optional<std::string> ed1_violation(const Ed1Witness& w) {
    const auto& [P, gamma, c, u, v] = w;
    if (sgn(gamma) <= 0 || sgn(c) <= 0 || sgn(u) <= 0 || sgn(v) <= 0) return "non-positive parameter";
    if (5 * c - 1 != gamma * P) return "5c - 1 != gamma*P";
    if (mpz_fdiv_ui(gamma.get_mpz_t(), 5) != 4) return "gamma != 4 (mod 5)";
    if (gcd(gamma, c) != 1) return "gcd(gamma, c) != 1";
    if (u * v != c * c) return "u*v != c^2";
    if (u > v) return "u > v";
    if (!divides(gamma, u + c) || !divides(gamma, v + c)) return "u or v not = -c (mod gamma)";
    if (divides(P, u + c) || divides(P, v + c)) return "u or v = -c (mod P)";
    return std::nullopt;
}

Solution ed1_reconstruct(const Ed1Witness& w) {
    if (auto why = ed1_violation(w)) throw Error(Errc::KernelViolation, *why);
    const Integer A = (w.u + w.c) / w.gamma;
    const Integer B = (w.v + w.c) / w.gamma;
    if ((w.gamma * A - w.c) * (w.gamma * B - w.c) != w.c * w.c)
        throw Error(Errc::KernelViolation, "kernel identity fails after reconstruction");
    return make_solution(w.P, A, B, w.c * w.P, SolutionClass::ED1);
}

Integer default_gamma_max(const Integer& P) {
    const double l = std::log(P.get_d());
    return 5 * Integer(static_cast<unsigned long>(std::ceil(l * l * l)));
}

}  // namespace serp
