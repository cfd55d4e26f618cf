#pragma once

// Exact integer and rational primitives. Everything downstream is built on
// these; no floating point is used for any arithmetic decision.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace serp {

/// Unbounded integer. Used for every natural-number or integer quantity.
using Integer = mpz_class;

enum class Errc {
    NotInvertible,
    Inconsistent,
    EvenModulus,
    OutOfRange,
    NotPrime,
    WrongResidue,
    ParityViolation,
    KernelViolation,
    InvalidSolution,
    ClassificationViolation,
    UnsupportedPrime,
    IrreparableCollision,
    BadResidue,
    NotCoprime,
    DeltaFilterFailed,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(const Integer& num, const Integer& den = 1);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }
    bool is_integer() const { return den() == 1; }
    std::string str() const { return q_.get_str(); }
    /// Decimal approximation for reports only.
    double approx() const { return q_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

private:
    struct Raw {};
    Rational(Raw, mpq_class q);
    mpq_class q_{0};
};

/// Unit fraction 1/n.
Rational unit(const Integer& n);

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Primes strictly increasing; product of prime^exponent is the factored value.
using Factorization = std::vector<PrimePower>;

struct Congruence {
    Integer residue;
    Integer modulus;
    bool operator==(const Congruence&) const = default;
};

struct SquarefreeSplit {
    Integer alpha;   // squarefree part
    Integer dprime;  // delta = alpha * dprime^2
    bool operator==(const SquarefreeSplit&) const = default;
};

/// Largest n for which is_prime is deterministic (Miller-Rabin with the
/// first 13 prime bases): 3317044064679887385961981 - 1.
const Integer& is_prime_limit();

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

Integer mod_inverse(const Integer& a, const Integer& m);
Congruence crt_combine(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);
int jacobi_symbol(const Integer& a, const Integer& n);

Factorization factorize(const Integer& n);
Integer expand(const Factorization& f);
std::vector<Integer> divisors(const Factorization& f);
std::vector<Integer> divisors(const Integer& n);
/// Divisors of n^2, from the factorization of n.
std::vector<Integer> divisors_of_square(const Integer& n);

SquarefreeSplit squarefree_split(const Integer& delta);
Integer euler_phi(const Integer& n);

Integer isqrt(const Integer& n);
/// Exact square root when n is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

inline bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t n);

}  // namespace serp
