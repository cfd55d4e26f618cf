#include "doctest.h"
#include "serp/oracle.hpp"
#include "serp/solution.hpp"
#include "support.hpp"

using namespace serp;
using testing::I;
using testing::thrown;

TEST_CASE("verify_solution") {
    CHECK(verify_solution(11, 3, 9, 99));
    CHECK(verify_solution(11, 3, 11, 33));
    CHECK_FALSE(verify_solution(11, 3, 9, 100));
    CHECK(verify_solution(11, 99, 3, 9));  // order does not matter
    CHECK_FALSE(verify_solution(11, 0, 9, 99));
    CHECK_FALSE(verify_solution(11, -3, 9, 99));
}

TEST_CASE("make_solution sorts and flags strictness") {
    const Solution s = make_solution(11, 99, 3, 9, SolutionClass::ED1);
    CHECK(s.A == 3);
    CHECK(s.B == 9);
    CHECK(s.C == 99);
    CHECK(s.strict);
    const Solution w = make_solution(13, 39, 3, 39, SolutionClass::Explicit);
    CHECK_FALSE(w.strict);
    CHECK(thrown([] { (void)make_solution(11, 3, 9, 100, SolutionClass::ED1); }) == Errc::InvalidSolution);
}

TEST_CASE("classify_solution examples") {
    auto a = classify_solution(make_solution(11, 3, 9, 99, SolutionClass::ED1));
    CHECK(a == MultiplicityClass{1, false, true});
    auto b = classify_solution(make_solution(73, 15, 584, 8760, SolutionClass::ED2));
    CHECK(b == MultiplicityClass{2, true, true});
    auto c = classify_solution(make_solution(11, 4, 5, 220, SolutionClass::ED1));
    CHECK(c == MultiplicityClass{1, false, true});
    CHECK(multiplicity_class(make_solution(73, 15, 584, 8760, SolutionClass::Explicit)) == SolutionClass::ED2);
}

TEST_CASE("classify_solution error paths") {
    CHECK(thrown([] { (void)classify_solution(make_solution(5, 2, 3, 6, SolutionClass::Explicit)); }) ==
          Errc::UnsupportedPrime);
    CHECK(thrown([] { (void)classify_solution(make_solution(3, 1, 2, 6, SolutionClass::Explicit)); }) ==
          Errc::UnsupportedPrime);
    Solution forged = make_solution(11, 3, 9, 99, SolutionClass::ED1);
    forged.C = 100;
    CHECK(thrown([&] { (void)classify_solution(forged); }) == Errc::InvalidSolution);
    // 5/7 = 1/2 + 1/7 + 1/14 is fine; no verified triple has zero multiples of P > 5
    CHECK(classify_solution(make_solution(7, 2, 7, 14, SolutionClass::Explicit)).count == 2);
}

TEST_CASE("min_denominator_bounds examples") {
    const auto r31 = min_denominator_bounds(31);
    CHECK(r31.lo == 7);
    CHECK(r31.hi == 18);
    CHECK(r31.contains(7));
    CHECK(r31.contains(8));
    CHECK_FALSE(r31.contains(19));
    const auto r73 = min_denominator_bounds(73);
    CHECK(r73.lo == 15);
    CHECK(r73.hi == 43);
    const auto r11 = min_denominator_bounds(11);
    CHECK(r11.lo == 3);
    CHECK(r11.hi == 6);
}

TEST_CASE("min_denominator_bounds matches P < 5A < 3P") {
    for (std::uint64_t P = 2; P <= 3000; ++P) {
        const auto r = min_denominator_bounds(I(P));
        for (std::uint64_t A = 1; A <= P; ++A) REQUIRE(r.contains(I(A)) == (P < 5 * A && 5 * A < 3 * P));
    }
}

TEST_CASE("oracle solutions classify with one or two multiples and P never divides A") {
    std::uint64_t checked = 0;
    for (auto p : testing::small_primes(1000)) {
        if (p <= 5) continue;
        for (const auto& s : enumerate_all_solutions(I(p), true).solutions) {
            const auto mc = classify_solution(s);
            REQUIRE((mc.count == 1 || mc.count == 2));
            REQUIRE_FALSE(divides(I(p), s.A));
            REQUIRE(min_denominator_bounds(I(p)).contains(s.A));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}
