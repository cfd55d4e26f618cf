#include <algorithm>
#include <set>

#include "doctest.h"
#include "serp/ed1.hpp"
#include "serp/ed2.hpp"
#include "serp/explicit_residues.hpp"
#include "serp/oracle.hpp"
#include "support.hpp"

using namespace serp;
using testing::I;
using testing::thrown;

using Triple = std::array<Integer, 3>;

namespace {

std::set<Triple> triples(const OracleEnumeration& e) {
    std::set<Triple> out;
    for (const auto& s : e.solutions) out.insert({s.A, s.B, s.C});
    return out;
}

// Independent reference: every (A, B) pair, C by exact rational arithmetic.
std::set<Triple> naive(std::uint64_t P, bool distinct) {
    std::set<Triple> out;
    const Rational target(5, I(P));
    for (std::uint64_t A = 1; A <= 3 * P / 5 + 1; ++A) {
        const Rational q = target - unit(I(A));
        if (!(Rational(0) < q)) continue;
        for (std::uint64_t B = A; B <= 2 * P * A; ++B) {
            const Rational rest = q - unit(I(B));
            if (!(Rational(0) < rest)) continue;
            if (rest.num() != 1) continue;
            const Integer C = rest.den();
            if (C < I(B)) continue;
            if (distinct && (A == B || I(B) == C)) continue;
            out.insert({I(A), I(B), C});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("oracle examples") {
    const auto s11 = triples(enumerate_all_solutions(11, true));
    CHECK(s11 == std::set<Triple>{{3, 9, 99}, {3, 11, 33}, {4, 5, 220}});
    const auto s73 = triples(enumerate_all_solutions(73, true));
    for (const Triple& t : {Triple{15, 584, 8760}, Triple{15, 657, 3285}, Triple{15, 730, 2190}, Triple{15, 876, 1460}})
        CHECK(s73.count(t) == 1);
    CHECK(triples(enumerate_all_solutions(7, true)).count({2, 7, 14}) == 1);
    CHECK(thrown([] { (void)enumerate_all_solutions(4, true); }) == Errc::NotPrime);
}

TEST_CASE("existence_check") {
    CHECK(existence_check(31));
    CHECK(existence_check(3511));
    CHECK_FALSE(existence_check(2));
    CHECK(thrown([] { (void)existence_check(4); }) == Errc::NotPrime);
}

TEST_CASE("oracle output is lexicographic and verified") {
    for (auto p : testing::small_primes(300)) {
        for (bool distinct : {true, false}) {
            const auto e = enumerate_all_solutions(I(p), distinct);
            for (std::size_t i = 0; i < e.solutions.size(); ++i) {
                const auto& s = e.solutions[i];
                REQUIRE(verify_solution(s.P, s.A, s.B, s.C));
                if (distinct) REQUIRE(s.strict);
                if (i) {
                    const auto& t = e.solutions[i - 1];
                    REQUIRE(Triple{t.A, t.B, t.C} < Triple{s.A, s.B, s.C});
                }
            }
        }
    }
}

TEST_CASE("oracle agrees with a naive rational enumeration") {
    for (auto p : testing::small_primes(80)) {
        CAPTURE(p);
        REQUIRE(triples(enumerate_all_solutions(I(p), true)) == naive(p, true));
        REQUIRE(triples(enumerate_all_solutions(I(p), false)) == naive(p, false));
    }
}

TEST_CASE("wide path agrees with the narrow path") {
    for (auto p : testing::small_primes(400)) {
        for (bool distinct : {true, false}) {
            const auto narrow = enumerate_all_solutions(I(p), distinct);
            const auto wide = enumerate_all_solutions(I(p), distinct, OracleArithmetic::Wide);
            REQUIRE(narrow.solutions == wide.solutions);
        }
    }
}

TEST_CASE("engines are sound against the oracle, P <= 500 and spot primes") {
    auto check_prime = [](const Integer& P, const Integer& gamma_max, const Integer& delta_max) {
        const auto all = triples(enumerate_all_solutions(P, true));
        for (const auto& w : ed2_search(P, delta_max)) {
            const Solution s = ed2_reconstruct(w);
            REQUIRE(all.count({s.A, s.B, s.C}) == 1);
        }
        for (const auto& w : ed1_search(P, gamma_max)) {
            const Solution s = ed1_reconstruct(w);
            REQUIRE(all.count({s.A, s.B, s.C}) == 1);
        }
    };
    for (auto p : testing::small_primes(500))
        if (p % 5 == 1) check_prime(I(p), 200, 60);
    check_prime(2521, 100, 30);
    check_prime(3511, 100, 10);
}

TEST_CASE("oracle tags follow the multiplicity pattern") {
    for (auto p : testing::small_primes(500)) {
        if (p <= 5) continue;
        for (const auto& s : enumerate_all_solutions(I(p), true).solutions) {
            REQUIRE(s.cls != SolutionClass::Explicit);
            REQUIRE(s.cls == multiplicity_class(s));
        }
    }
}
