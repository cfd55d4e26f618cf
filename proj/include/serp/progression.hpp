#pragma once

// Pre-sieving by progressions. For fixed delta and a modulus r = 4 (mod 5)
// with gcd(r, 5*delta) = 1, the primes P with
//   P = 1 (mod 5),  P = -(5*delta)^{-1} (mod r)
// are exactly those for which r divides 5*P*delta + 1, so each such P comes
// with a ready-made factor pair of the two-multiple kernel.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serp/solution.hpp"

namespace serp {

struct ProgressionClass {
    std::uint64_t delta = 0;
    std::uint64_t r = 0;
    std::uint64_t residue = 0;
    std::uint64_t modulus = 0;  // 5r
    bool operator==(const ProgressionClass&) const = default;
};

/// Throws BadResidue if r != 4 (mod 5), NotCoprime if gcd(r, 5*delta) != 1.
ProgressionClass build_progression_class(std::uint64_t delta, std::uint64_t r);

/// Moduli r <= R with r = 4 (mod 5) and gcd(r, 5*delta) = 1, ascending.
std::vector<std::uint64_t> admissible_moduli(std::uint64_t R, std::uint64_t delta);

std::vector<std::uint64_t> scan_class_primes(const ProgressionClass& cls, std::uint64_t x);

/// s = (5*P*delta + 1)/r, b = (r+1)/5, c = (s+1)/5, A = bc/delta.
/// Throws BadResidue if P is outside the class and DeltaFilterFailed if
/// delta does not divide bc.
Solution reconstruct_from_class(const Integer& P, const Integer& delta, const Integer& r);

/// N(P; R, delta): admissible r <= R dividing 5*P*delta + 1.
std::uint64_t count_local_params(std::uint64_t P, std::uint64_t R, std::uint64_t delta);

/// Sum over admissible r <= R of 1/phi(5r).
Rational phi_sum(std::uint64_t R, std::uint64_t delta);

/// Offset logarithmic integral Li(x) = li(x) - li(2), series evaluation.
double offset_li(double x);

struct ClassScan {
    ProgressionClass cls;
    std::uint64_t primes_found = 0;
    std::optional<std::uint64_t> first_prime;
    bool exceptional = false;
    double li_deviation = 0;  // |primes_found - Li(x)/phi(5r)|, inspection only
};

struct ScanReport {
    std::uint64_t x = 0, R = 0, delta = 0;
    std::vector<ClassScan> classes;              // one per admissible r, ascending
    std::map<std::uint64_t, std::uint64_t> n_of_p;  // P -> N(P; R, delta)
    std::uint64_t population = 0;                // #{P <= x prime, P = 1 (mod 5)}
    std::uint64_t total_by_prime = 0;            // sum over P of N(P; R, delta)
    std::uint64_t total_by_class = 0;            // sum over r of class prime counts
    std::optional<Rational> average;             // empty when population == 0
    Rational phi_sum;
    std::vector<std::uint64_t> exceptional;

    std::map<std::uint64_t, std::uint64_t> per_r_counts() const;
};

ScanReport average_local_params(std::uint64_t x, std::uint64_t R, std::uint64_t delta);

/// Admissible r <= R whose class holds no prime <= x.
std::vector<std::uint64_t> exceptional_set(std::uint64_t x, std::uint64_t R, std::uint64_t delta);

/// Mean of N(P; R, delta) over a list of R values and a least-squares fit
/// mean ~ slope * ln R + intercept. The slope estimates the growth constant.
struct GrowthFit {
    std::uint64_t x = 0, delta = 0;
    std::vector<std::uint64_t> R;
    std::vector<Rational> mean;
    double slope = 0;
    double intercept = 0;
    std::vector<double> residuals;
};

GrowthFit fit_average_growth(std::uint64_t x, std::uint64_t delta, std::span<const std::uint64_t> Rs);

/// CSV with header delta,r,modulus,residue,primes_found,first_prime,exceptional.
std::string classes_csv(const std::vector<ClassScan>& classes);

}  // namespace serp
