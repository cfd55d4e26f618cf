#include <cmath>
#include <numeric>

#include "doctest.h"
#include "serp/prime_sieve.hpp"
#include "serp/progression.hpp"
#include "support.hpp"

using namespace serp;
using testing::I;
using testing::thrown;
using testing::uniform;

using U = std::vector<std::uint64_t>;

TEST_CASE("primes_up_to matches a plain sieve and is_prime") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == U{2});
    CHECK(primes_up_to(30) == U{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(2'000'000) == testing::small_primes(2'000'000));
    // past one segment of 2^18 members
    const auto hi = primes_up_to(3'000'000);
    CHECK(hi.size() == 216816);
}

TEST_CASE("progression_primes against is_prime") {
    for (int i = 0; i < 300; ++i) {
        const auto q = uniform(1, 500), a = uniform(0, 1000);
        const auto x = uniform(0, 200000);
        U want;
        for (std::uint64_t n = a % q; n <= x; n += q)
            if (is_prime(n)) want.push_back(n);
        CAPTURE(a);
        CAPTURE(q);
        CAPTURE(x);
        REQUIRE(progression_primes(a, q, x) == want);
    }
    CHECK(progression_primes(5, 10, 100) == U{5});
    CHECK(progression_primes(3, 10, 2) == U{});
    CHECK(thrown([] { (void)progression_primes(1, 0, 10); }) == Errc::OutOfRange);
}

TEST_CASE("progression_primes on a large window stays consistent") {
    const std::uint64_t x = 50'000'000;
    const auto ps = progression_primes(11, 20, x);
    for (std::size_t i = 0; i < ps.size(); i += 997) REQUIRE(is_prime(ps[i]));
    // Dirichlet: roughly pi(x)/phi(20)
    CHECK(std::abs(static_cast<double>(ps.size()) - 3001134.0 / 8) < 2000);
}

TEST_CASE("build_progression_class examples") {
    CHECK(build_progression_class(1, 4) == ProgressionClass{1, 4, 11, 20});
    CHECK(build_progression_class(1, 14) == ProgressionClass{1, 14, 11, 70});
    CHECK(build_progression_class(1, 9) == ProgressionClass{1, 9, 16, 45});
    CHECK(thrown([] { (void)build_progression_class(1, 5); }) == Errc::BadResidue);
    CHECK(thrown([] { (void)build_progression_class(2, 14); }) == Errc::NotCoprime);
    CHECK(thrown([] { (void)build_progression_class(3, 9); }) == Errc::NotCoprime);
}

TEST_CASE("scan_class_primes examples") {
    CHECK(scan_class_primes(build_progression_class(1, 4), 100) == U{11, 31, 71});
    CHECK(scan_class_primes(build_progression_class(1, 9), 100) == U{61});
    CHECK(scan_class_primes(build_progression_class(1, 4), 10).empty());
}

TEST_CASE("reconstruct_from_class examples") {
    const Solution a = reconstruct_from_class(11, 1, 4);
    CHECK(std::array<Integer, 3>{a.A, a.B, a.C} == std::array<Integer, 3>{3, 11, 33});
    const Solution b = reconstruct_from_class(31, 1, 4);
    CHECK(std::array<Integer, 3>{b.A, b.B, b.C} == std::array<Integer, 3>{8, 31, 248});
    const Solution c = reconstruct_from_class(71, 1, 4);
    CHECK(std::array<Integer, 3>{c.A, c.B, c.C} == std::array<Integer, 3>{18, 71, 1278});
    CHECK(thrown([] { (void)reconstruct_from_class(41, 1, 4); }) == Errc::BadResidue);
    CHECK(thrown([] { (void)reconstruct_from_class(11, 1, 5); }) == Errc::BadResidue);
    bool saw_filter = false;
    for (std::uint64_t delta = 2; delta <= 20 && !saw_filter; ++delta)
        for (auto r : admissible_moduli(200, delta)) {
            const auto cls = build_progression_class(delta, r);
            for (auto P : scan_class_primes(cls, 5000))
                if (thrown([&] { (void)reconstruct_from_class(I(P), I(delta), I(r)); }) == Errc::DeltaFilterFailed)
                    saw_filter = true;
        }
    CHECK(saw_filter);
}

TEST_CASE("class members give integral s = 4 (mod 5)") {
    for (int i = 0; i < 300; ++i) {
        const auto delta = uniform(1, 20);
        const auto moduli = admissible_moduli(1000, delta);
        const auto r = moduli[uniform(0, moduli.size() - 1)];
        const auto cls = build_progression_class(delta, r);
        for (auto P : scan_class_primes(cls, 100000)) {
            const Integer N = 5 * I(P) * delta + 1;
            REQUIRE(divides(I(r), N));
            REQUIRE(mod(N / I(r), 5) == 4);
            REQUIRE(P % 5 == 1);
        }
    }
}

TEST_CASE("count_local_params examples") {
    CHECK(count_local_params(11, 20, 1) == 2);
    CHECK(count_local_params(31, 20, 1) == 1);
    CHECK(count_local_params(11, 3, 1) == 0);
    CHECK(count_local_params(31, 3, 7) == 0);
    CHECK(admissible_moduli(20, 1) == U{4, 9, 14, 19});
    CHECK(admissible_moduli(20, 3) == U{4, 14, 19});
}

TEST_CASE("average_local_params small cases") {
    const ScanReport r = average_local_params(100, 20, 1);
    CHECK(r.population == 5);
    std::uint64_t total = 0;
    for (std::uint64_t P : {11, 31, 41, 61, 71}) {
        std::uint64_t n = 0;
        for (std::uint64_t d : {4, 9, 14, 19}) n += (5 * P + 1) % d == 0;
        CHECK(r.n_of_p.at(P) == n);
        total += n;
    }
    REQUIRE(r.average);
    CHECK(*r.average == Rational(I(total), 5));
    CHECK(r.total_by_prime == r.total_by_class);
    CHECK(r.exceptional == U{19});
    CHECK(r.phi_sum == Rational(2, 9));
    CHECK(phi_sum(20, 1) == Rational(1, 8) + Rational(1, 24) + Rational(1, 24) + Rational(1, 72));
    const auto counts = r.per_r_counts();
    CHECK(counts.at(4) == 3);
    CHECK(counts.at(19) == 0);

    const ScanReport empty = average_local_params(10, 20, 1);
    CHECK(empty.population == 0);
    CHECK_FALSE(empty.average);
    CHECK(thrown([] { (void)average_local_params(10, 20, 0); }) == Errc::OutOfRange);
}

TEST_CASE("exceptional_set examples") {
    CHECK(exceptional_set(100, 20, 1) == U{19});
    CHECK(exceptional_set(1000, 20, 1).empty());
    CHECK(exceptional_set(2, 20, 1) == U{4, 9, 14, 19});
}

TEST_CASE("double counting holds exactly") {
    for (std::uint64_t x : {1000, 20000, 200000})
        for (std::uint64_t R : {10, 50, 200})
            for (std::uint64_t delta : {1, 2, 3, 7, 12}) {
                const ScanReport r = average_local_params(x, R, delta);
                REQUIRE(r.total_by_prime == r.total_by_class);
                std::uint64_t sum = 0;
                for (const auto& [P, n] : r.n_of_p) {
                    REQUIRE(n == count_local_params(P, R, delta));
                    sum += n;
                }
                REQUIRE(sum == r.total_by_prime);
            }
}

TEST_CASE("average is nondecreasing in R") {
    for (std::uint64_t delta : {1, 2, 6}) {
        Rational prev(0);
        for (std::uint64_t R = 4; R <= 300; R += 17) {
            const auto r = average_local_params(30000, R, delta);
            REQUIRE(r.average);
            REQUIRE(prev <= *r.average);
            prev = *r.average;
        }
    }
}

TEST_CASE("growth signature at x = 10^6") {
    const U Rs{8, 16, 32, 64, 128};
    const GrowthFit fit = fit_average_growth(1'000'000, 1, Rs);
    REQUIRE(fit.mean.size() == 5);
    REQUIRE(fit.residuals.size() == 5);
    CHECK(fit.slope > 0);
    for (std::size_t i = 1; i < 5; ++i) {
        const double inc = (fit.mean[i] - fit.mean[i - 1]).approx();
        CHECK(inc > 0);
        const double per_log = inc / std::log(2.0);
        CHECK(per_log < 3 * fit.slope);
        CHECK(per_log > fit.slope / 3);
    }
    MESSAGE("fitted growth constant " << fit.slope);
}

TEST_CASE("offset_li") {
    CHECK(offset_li(2) == 0);
    CHECK(std::abs(offset_li(1e6) - 78626.5) < 1.0);  // li(10^6) - li(2) = 78627.55 - 1.045
    CHECK(std::abs(offset_li(100) - 29.08) < 0.01);
}

TEST_CASE("classes_csv") {
    const auto r = average_local_params(100, 9, 1);
    CHECK(classes_csv(r.classes) ==
          "delta,r,modulus,residue,primes_found,first_prime,exceptional\n"
          "1,4,20,11,3,11,false\n"
          "1,9,45,16,1,61,false\n");
}
