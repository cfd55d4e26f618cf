#include "serp/exact_arith.hpp"

#include <algorithm>
#include <array>

namespace serp {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "mpz fast paths assume 64-bit unsigned long");

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::Inconsistent: return "Inconsistent";
        case Errc::EvenModulus: return "EvenModulus";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotPrime: return "NotPrime";
        case Errc::WrongResidue: return "WrongResidue";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::KernelViolation: return "KernelViolation";
        case Errc::InvalidSolution: return "InvalidSolution";
        case Errc::ClassificationViolation: return "ClassificationViolation";
        case Errc::UnsupportedPrime: return "UnsupportedPrime";
        case Errc::IrreparableCollision: return "IrreparableCollision";
        case Errc::BadResidue: return "BadResidue";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::DeltaFilterFailed: return "DeltaFilterFailed";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::OutOfRange, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(Raw, mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num() == 0) throw Error(Errc::OutOfRange, "division by zero");
    return Rational(Rational::Raw{}, mpq_class(a.q_ / b.q_));
}

Rational unit(const Integer& n) { return Rational(1, n); }

// ---------------------------------------------------------------------------
// Conversions

bool fits_u64(const Integer& n) { return sgn(n) >= 0 && n.fits_ulong_p(); }

std::uint64_t to_u64(const Integer& n) {
    if (!fits_u64(n)) throw Error(Errc::OutOfRange, "value does not fit in 64 bits: " + n.get_str());
    return n.get_ui();
}

Integer from_u64(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// Primality

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr std::array<std::uint64_t, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool strong_probable_prime(const Integer& n, unsigned long a, const Integer& d, unsigned s) {
    const Integer n1 = n - 1;
    Integer x;
    const Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n1) return true;
    }
    return false;
}

}  // namespace

const Integer& is_prime_limit() {
    static const Integer limit("3317044064679887385961981");
    return limit;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first 12 prime bases are deterministic below 2^64.
    for (std::size_t i = 0; i < 12; ++i)
        if (!strong_probable_prime(n, kBases[i], d, s)) return false;
    return true;
}

bool is_prime(const Integer& n) {
    if (sgn(n) <= 0) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    if (n >= is_prime_limit())
        throw Error(Errc::OutOfRange, "deterministic primality is not available above " + is_prime_limit().get_str());
    for (std::uint64_t p : kBases)
        if (divides(from_u64(p), n)) return false;
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : kBases)
        if (!strong_probable_prime(n, a, d, s)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Modular arithmetic

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < 2) throw Error(Errc::OutOfRange, "modulus must be at least 2");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(Errc::NotInvertible, a.get_str() + " mod " + m.get_str());
    return mod(inv, m);
}

Congruence crt_combine(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
    if (m1 < 1 || m2 < 1) throw Error(Errc::OutOfRange, "moduli must be positive");
    const Integer a = mod(r1, m1);
    const Integer b = mod(r2, m2);
    const Integer g = gcd(m1, m2);
    if (!divides(g, b - a))
        throw Error(Errc::Inconsistent, a.get_str() + " mod " + m1.get_str() + " vs " + b.get_str() + " mod " + m2.get_str());
    const Integer m2g = m2 / g;
    const Integer lcm = m1 * m2g;
    Integer t = 0;
    if (m2g > 1) t = mod((b - a) / g * mod_inverse(m1 / g, m2g), m2g);
    return {mod(a + m1 * t, lcm), lcm};
}

int jacobi_symbol(const Integer& a_in, const Integer& n_in) {
    if (n_in < 1) throw Error(Errc::OutOfRange, "modulus must be positive");
    if (mpz_even_p(n_in.get_mpz_t())) throw Error(Errc::EvenModulus, n_in.get_str());
    Integer a = mod(a_in, n_in);
    Integer n = n_in;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            const unsigned long r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
        a = mod(a, n);
    }
    return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------
// Factorization and divisors

namespace {

void push_factor(Factorization& f, const Integer& p, unsigned e) {
    if (e > 0) f.push_back({p, e});
}

// Trial division of m (already stripped of factors below `start`).
void factor_u64(std::uint64_t m, Factorization& out) {
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        push_factor(out, from_u64(p), e);
    };
    strip(2);
    strip(3);
    bool cofactor_prime = m > 1 && is_prime(m);
    for (std::uint64_t p = 5; !cofactor_prime && static_cast<u128>(p) * p <= m; p += 6) {
        for (std::uint64_t q : {p, p + 2}) {
            if (m % q != 0) continue;
            strip(q);
            cofactor_prime = m > 1 && is_prime(m);
            if (cofactor_prime) break;
        }
    }
    if (m > 1) out.push_back({from_u64(m), 1});
}

}  // namespace

Factorization factorize(const Integer& n) {
    if (n < 1) throw Error(Errc::OutOfRange, "factorize requires n >= 1");
    Factorization out;
    if (fits_u64(n)) {
        factor_u64(to_u64(n), out);
        return out;
    }
    // Wide inputs: trial division until the cofactor fits a machine word or is prime.
    Integer m = n;
    std::uint64_t p = 2;
    while (!fits_u64(m)) {
        if (is_prime(m)) {
            out.push_back({m, 1});
            return out;
        }
        unsigned e = 0;
        const Integer pp = from_u64(p);
        while (divides(pp, m)) {
            m /= pp;
            ++e;
        }
        push_factor(out, pp, e);
        p = (p == 2) ? 3 : p + 2;
    }
    Factorization rest;
    factor_u64(to_u64(m), rest);
    // rest only holds primes >= p, so the concatenation stays sorted.
    for (auto& f : rest) {
        if (!out.empty() && out.back().prime == f.prime)
            out.back().exponent += f.exponent;
        else
            out.push_back(std::move(f));
    }
    return out;
}

Integer expand(const Factorization& f) {
    Integer v = 1;
    for (const auto& [p, e] : f) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::vector<Integer> divisors(const Factorization& f) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> divisors(const Integer& n) { return divisors(factorize(n)); }

std::vector<Integer> divisors_of_square(const Integer& n) {
    Factorization f = factorize(n);
    for (auto& pe : f) pe.exponent *= 2;
    return divisors(f);
}

SquarefreeSplit squarefree_split(const Integer& delta) {
    if (delta < 1) throw Error(Errc::OutOfRange, "squarefree_split requires delta >= 1");
    SquarefreeSplit s{1, 1};
    for (const auto& [p, e] : factorize(delta)) {
        if (e % 2) s.alpha *= p;
        Integer half;
        mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
        s.dprime *= half;
    }
    return s;
}

Integer euler_phi(const Integer& n) {
    Integer phi = n;
    for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
    return phi;
}

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw Error(Errc::OutOfRange, "isqrt of negative value");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

}  // namespace serp
