#include "doctest.h"
#include "serp/explicit_residues.hpp"
#include "serp/oracle.hpp"
#include "support.hpp"

using namespace serp;
using testing::I;
using testing::thrown;

using Triple = std::array<Integer, 3>;

TEST_CASE("decompose_explicit examples") {
    const Solution s7 = decompose_explicit(7);
    CHECK(Triple{s7.A, s7.B, s7.C} == Triple{2, 7, 14});
    CHECK(s7.strict);
    const Solution s13 = decompose_explicit(13);
    CHECK(Triple{s13.A, s13.B, s13.C} == Triple{3, 39, 39});
    CHECK_FALSE(s13.strict);
    const Solution s19 = decompose_explicit(19);
    CHECK(Triple{s19.A, s19.B, s19.C} == Triple{4, 152, 152});
    const Solution s3 = decompose_explicit(3);
    CHECK(Triple{s3.A, s3.B, s3.C} == Triple{1, 3, 3});
    CHECK(s7.cls == SolutionClass::Explicit);
}

TEST_CASE("decompose_explicit error paths") {
    CHECK(thrown([] { (void)decompose_explicit(11); }) == Errc::WrongResidue);
    CHECK(thrown([] { (void)decompose_explicit(5); }) == Errc::WrongResidue);
    CHECK(thrown([] { (void)decompose_explicit(2); }) == Errc::ParityViolation);
}

TEST_CASE("repair_distinct examples") {
    const Solution r13 = repair_distinct(decompose_explicit(13));
    CHECK(Triple{r13.A, r13.B, r13.C} == Triple{3, 20, 780});
    CHECK(r13.strict);
    const Solution r19 = repair_distinct(decompose_explicit(19));
    CHECK(Triple{r19.A, r19.B, r19.C} == Triple{4, 77, 5852});
    const Solution r7 = repair_distinct(decompose_explicit(7));
    CHECK(Triple{r7.A, r7.B, r7.C} == Triple{2, 7, 14});
    const Solution r3 = repair_distinct(decompose_explicit(3));
    CHECK(Triple{r3.A, r3.B, r3.C} == Triple{1, 2, 6});
}

TEST_CASE("repair_triple collisions") {
    // first split of 2/5 yields 3, which hits the remaining 3; the second split resolves it
    CHECK(repair_triple({3, 5, 5}) == Triple{2, 6, 15});
    CHECK(thrown([] { (void)repair_triple({2, 3, 3}); }) == Errc::IrreparableCollision);
    CHECK(thrown([] { (void)repair_triple({4, 4, 4}); }) == Errc::IrreparableCollision);
    CHECK(repair_triple({9, 2, 4}) == Triple{2, 4, 9});
    // even repeated pair: 2/6 = 1/4 + 1/12
    CHECK(repair_triple({6, 6, 100}) == Triple{4, 12, 100});
}

TEST_CASE("repair_triple preserves the unit-fraction sum") {
    int repaired = 0;
    for (std::uint64_t a = 1; a <= 40; ++a)
        for (std::uint64_t n = 1; n <= 40; ++n) {
            const Triple t{I(a), I(n), I(n)};
            const Rational before = unit(t[0]) + unit(t[1]) + unit(t[2]);
            Triple out;
            if (const auto e = thrown([&] { out = repair_triple(t); })) {
                REQUIRE(*e == Errc::IrreparableCollision);
                // 2/n has no distinct split for n <= 2; the rest collide with a
                const bool expected = n <= 2 || a == n || (a == 2 && n == 3) || (a == 3 && n == 4);
                CAPTURE(a);
                CAPTURE(n);
                REQUIRE(expected);
                continue;
            }
            REQUIRE(out[0] < out[1]);
            REQUIRE(out[1] < out[2]);
            REQUIRE((unit(out[0]) + unit(out[1]) + unit(out[2])) == before);
            ++repaired;
        }
    CHECK(repaired == 1600 - 40 - 40 - 38 - 2);
}

TEST_CASE("explicit forms verify and repair for primes up to 2*10^4") {
    std::uint64_t n = 0;
    for (auto p : testing::small_primes(20000)) {
        const auto res = p % 5;
        if (res < 2 || p == 2) continue;
        const Solution s = decompose_explicit(I(p));
        REQUIRE(verify_solution(s.P, s.A, s.B, s.C));
        if (res == 2) REQUIRE(((p - 2) / 5) % 2 == 1);
        const Solution r = repair_distinct(s);
        REQUIRE(r.A < r.B);
        REQUIRE(r.B < r.C);
        REQUIRE(verify_solution(r.P, r.A, r.B, r.C));
        ++n;
    }
    CHECK(n > 1500);
}

TEST_CASE("repaired explicit output appears in the oracle") {
    for (auto p : testing::small_primes(400)) {
        if (p % 5 < 2 || p == 2) continue;
        const Solution r = repair_distinct(decompose_explicit(I(p)));
        const auto all = enumerate_all_solutions(I(p), true).solutions;
        const bool found = std::any_of(all.begin(), all.end(), [&](const Solution& s) {
            return s.A == r.A && s.B == r.B && s.C == r.C;
        });
        REQUIRE(found);
    }
}
