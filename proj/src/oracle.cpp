#include "serp/oracle.hpp"

namespace serp {

namespace {

using u128 = unsigned __int128;

SolutionClass tag(const Integer& P, const Integer& A, const Integer& B, const Integer& C) {
    const int k = int(divides(P, A)) + int(divides(P, B)) + int(divides(P, C));
    if (k == 1) return SolutionClass::ED1;
    if (k == 2) return SolutionClass::ED2;
    return SolutionClass::Explicit;
}

struct Range {
    Integer a_lo, a_hi;
};

Range a_range(const Integer& P, bool distinct_only) {
    Range r;
    r.a_lo = P / 5 + 1;
    if (distinct_only) {
        r.a_hi = min_denominator_bounds(P).hi;
    } else {
        r.a_hi = 3 * P / 5;  // 5A <= 3P
    }
    return r;
}

// Triples for one A using 128-bit arithmetic; valid while d*B fits (P < 2^20).
template <class Emit>
void scan_a_narrow(std::uint64_t P, std::uint64_t A, bool distinct_only, Emit&& emit) {
    const std::uint64_t n = 5 * A - P;
    const std::uint64_t d = P * A;
    std::uint64_t b_lo = d / n + 1;
    const std::uint64_t b_hi = 2 * d / n;
    const std::uint64_t b_min = distinct_only ? A + 1 : A;
    if (b_lo < b_min) b_lo = b_min;
    for (std::uint64_t B = b_lo; B <= b_hi; ++B) {
        const u128 den = static_cast<u128>(n) * B - d;
        const u128 num = static_cast<u128>(d) * B;
        if (num % den != 0) continue;
        const u128 C = num / den;
        if (distinct_only ? C <= B : C < B) continue;
        emit(A, B, static_cast<std::uint64_t>(C));
    }
}

template <class Emit>
void scan_a_wide(const Integer& P, const Integer& A, bool distinct_only, Emit&& emit) {
    const Integer n = 5 * A - P;
    const Integer d = P * A;
    Integer b_lo = d / n + 1;
    const Integer b_hi = 2 * d / n;
    const Integer b_min = distinct_only ? Integer(A + 1) : A;
    if (b_lo < b_min) b_lo = b_min;
    for (Integer B = b_lo; B <= b_hi; ++B) {
        const Integer den = n * B - d;
        const Integer num = d * B;
        if (!divides(den, num)) continue;
        const Integer C = num / den;
        if (distinct_only ? C <= B : C < B) continue;
        emit(A, B, C);
    }
}

}  // namespace

OracleEnumeration enumerate_all_solutions(const Integer& P, bool distinct_only, OracleArithmetic arith) {
    if (!is_prime(P)) throw Error(Errc::NotPrime, P.get_str());
    OracleEnumeration out;
    out.P = P;
    out.distinct_only = distinct_only;
    const Range range = a_range(P, distinct_only);

    auto push = [&](const Integer& A, const Integer& B, const Integer& C) {
        out.solutions.push_back(make_solution(P, A, B, C, tag(P, A, B, C)));
    };

    if (arith == OracleArithmetic::Auto && P < (1u << 20)) {
        const std::uint64_t p = to_u64(P);
        for (std::uint64_t A = to_u64(range.a_lo); A <= to_u64(range.a_hi); ++A)
            scan_a_narrow(p, A, distinct_only, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
                push(from_u64(a), from_u64(b), from_u64(c));
            });
    } else {
        for (Integer A = range.a_lo; A <= range.a_hi; ++A) scan_a_wide(P, A, distinct_only, push);
    }
    // A ascending, then B ascending within each A: already lexicographic.
    return out;
}

bool existence_check(const Integer& P) { return !enumerate_all_solutions(P, true).solutions.empty(); }

}  // namespace serp
