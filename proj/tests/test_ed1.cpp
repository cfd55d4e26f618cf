#include <algorithm>
#include <set>

#include "doctest.h"
#include "serp/ed1.hpp"
#include "serp/oracle.hpp"
#include "support.hpp"

using namespace serp;
using testing::I;
using testing::thrown;

TEST_CASE("ed1_candidates examples") {
    CHECK(ed1_candidates(11, 20) == std::vector<Ed1Candidate>{{4, 9}, {9, 20}, {14, 31}, {19, 42}});
    CHECK(ed1_candidates(31, 4) == std::vector<Ed1Candidate>{{4, 25}});
    CHECK(ed1_candidates(11, 3).empty());
    CHECK(thrown([] { (void)ed1_candidates(13, 20); }) == Errc::WrongResidue);
}

TEST_CASE("ed1_search examples") {
    CHECK(ed1_search(11, 4) == std::vector<Ed1Witness>{{11, 4, 9, 3, 27}});
    const auto w9 = ed1_search(11, 9);
    CHECK(std::find(w9.begin(), w9.end(), Ed1Witness{11, 9, 20, 16, 25}) != w9.end());
    CHECK(ed1_search(31, 4).empty());
    CHECK(thrown([] { (void)ed1_search(7, 20); }) == Errc::WrongResidue);
}

TEST_CASE("ed1_reconstruct examples") {
    const Solution a = ed1_reconstruct({11, 4, 9, 3, 27});
    CHECK(a.A == 3);
    CHECK(a.B == 9);
    CHECK(a.C == 99);
    CHECK(a.cls == SolutionClass::ED1);
    const Solution b = ed1_reconstruct({11, 9, 20, 16, 25});
    CHECK(b.A == 4);
    CHECK(b.B == 5);
    CHECK(b.C == 220);
    CHECK(thrown([] { (void)ed1_reconstruct({11, 4, 9, 3, 26}); }) == Errc::KernelViolation);
    CHECK(thrown([] { (void)ed1_reconstruct({11, 9, 9, 3, 27}); }) == Errc::KernelViolation);
    CHECK(ed1_violation({11, 4, 9, 3, 27}) == std::nullopt);
    CHECK(ed1_violation({11, 4, 9, 27, 3}).has_value());
}

TEST_CASE("ed1 witnesses satisfy the kernel and the filters") {
    for (auto p : testing::small_primes(3000)) {
        if (p % 5 != 1) continue;
        const Integer P = I(p);
        for (const auto& w : ed1_search(P, 60)) {
            REQUIRE_FALSE(ed1_violation(w));
            const Solution s = ed1_reconstruct(w);
            REQUIRE((w.gamma * s.A - w.c) * (w.gamma * s.B - w.c) == w.c * w.c);
            REQUIRE(verify_solution(P, s.A, s.B, s.C));
            REQUIRE(s.A < s.B);
            const auto mc = classify_solution(s);
            REQUIRE(mc.count == 1);
            REQUIRE(mc.at_C);
        }
    }
}

TEST_CASE("gcd(gamma, c) = 1 for every candidate, P <= 10^4, gamma <= 100") {
    std::uint64_t n = 0;
    for (auto p : testing::small_primes(10000)) {
        if (p % 5 != 1) continue;
        for (const auto& [gamma, c] : ed1_candidates(I(p), 100)) {
            REQUIRE(gcd(gamma, c) == 1);
            REQUIRE(5 * c - 1 == gamma * I(p));
            ++n;
        }
    }
    CHECK(n > 4000);
}

TEST_CASE("ed1_search finds every one-multiple oracle solution, P <= 500") {
    for (auto p : testing::small_primes(500)) {
        if (p % 5 != 1) continue;
        const Integer P = I(p);
        std::set<std::array<Integer, 3>> want;
        Integer gamma_max = 4;
        for (const auto& s : enumerate_all_solutions(P, true).solutions) {
            if (s.cls != SolutionClass::ED1) continue;
            want.insert({s.A, s.B, s.C});
            gamma_max = std::max(gamma_max, Integer((5 * (s.C / P) - 1) / P));
        }
        std::set<std::array<Integer, 3>> got;
        for (const auto& w : ed1_search(P, gamma_max)) {
            const Solution s = ed1_reconstruct(w);
            got.insert({s.A, s.B, s.C});
        }
        CAPTURE(p);
        REQUIRE(got == want);
    }
}

TEST_CASE("default_gamma_max") {
    CHECK(default_gamma_max(11) == 70);  // 5 * ceil(13.76)
    CHECK(default_gamma_max(11) % 5 == 0);
}
