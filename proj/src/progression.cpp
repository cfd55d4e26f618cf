#include "serp/progression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "serp/prime_sieve.hpp"

namespace serp {

namespace {

using u128 = unsigned __int128;

bool admissible(std::uint64_t r, std::uint64_t delta) { return r % 5 == 4 && std::gcd(r, 5 * delta) == 1; }

std::vector<std::uint64_t> primes_one_mod_five(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes_up_to(x))
        if (p % 5 == 1) out.push_back(p);
    return out;
}

std::uint64_t local_count(std::uint64_t P, std::uint64_t delta, std::span<const std::uint64_t> moduli) {
    const u128 N = static_cast<u128>(5) * P * delta + 1;
    std::uint64_t n = 0;
    for (std::uint64_t r : moduli)
        if (N % r == 0) ++n;
    return n;
}

}  // namespace

ProgressionClass build_progression_class(std::uint64_t delta, std::uint64_t r) {
    if (r % 5 != 4) throw Error(Errc::BadResidue, "r must be 4 (mod 5), got " + std::to_string(r));
    if (delta == 0 || std::gcd(r, 5 * delta) != 1)
        throw Error(Errc::NotCoprime, "gcd(r, 5*delta) != 1 for r = " + std::to_string(r));
    if (r > (std::uint64_t{1} << 60)) throw Error(Errc::OutOfRange, "modulus too large");
    const Integer R = from_u64(r);
    const Integer target = mod(-mod_inverse(5 * from_u64(delta), R), R);
    const Congruence cls = crt_combine(1, 5, target, R);
    return {delta, r, to_u64(cls.residue), to_u64(cls.modulus)};
}

std::vector<std::uint64_t> admissible_moduli(std::uint64_t R, std::uint64_t delta) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 4; r <= R; r += 5)
        if (admissible(r, delta)) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> scan_class_primes(const ProgressionClass& cls, std::uint64_t x) {
    return progression_primes(cls.residue, cls.modulus, x);
}

Solution reconstruct_from_class(const Integer& P, const Integer& delta, const Integer& r) {
    if (mpz_fdiv_ui(r.get_mpz_t(), 5) != 4) throw Error(Errc::BadResidue, "r must be 4 (mod 5)");
    if (delta < 1 || gcd(r, 5 * delta) != 1) throw Error(Errc::NotCoprime, "gcd(r, 5*delta) != 1");
    const Integer N = 5 * P * delta + 1;
    if (mpz_fdiv_ui(P.get_mpz_t(), 5) != 1 || !divides(r, N))
        throw Error(Errc::BadResidue, "P = " + P.get_str() + " is not in the class of (delta, r)");
    const Integer s = N / r;
    if (mpz_fdiv_ui(s.get_mpz_t(), 5) != 4) throw Error(Errc::KernelViolation, "s != 4 (mod 5)");
    const Integer b = (r + 1) / 5;
    const Integer c = (s + 1) / 5;
    if (!divides(delta, b * c)) throw Error(Errc::DeltaFilterFailed, "delta does not divide bc");
    return make_solution(P, b * c / delta, b * P, c * P, SolutionClass::ED2);
}

std::uint64_t count_local_params(std::uint64_t P, std::uint64_t R, std::uint64_t delta) {
    const auto moduli = admissible_moduli(R, delta);
    return local_count(P, delta, moduli);
}

Rational phi_sum(std::uint64_t R, std::uint64_t delta) {
    Rational sum;
    for (std::uint64_t r : admissible_moduli(R, delta)) sum = sum + unit(euler_phi(5 * from_u64(r)));
    return sum;
}

double offset_li(double x) {
    if (x <= 2) return 0;
    // li(t) = gamma + ln ln t + sum_{n>=1} (ln t)^n / (n * n!)
    auto li = [](double t) {
        const double l = std::log(t);
        double term = 1, sum = 0;
        for (int n = 1; n < 400; ++n) {
            term *= l / n;
            const double add = term / n;
            sum += add;
            if (add < 1e-17 * sum) break;
        }
        return 0.57721566490153286 + std::log(l) + sum;
    };
    return li(x) - li(2.0);
}

std::map<std::uint64_t, std::uint64_t> ScanReport::per_r_counts() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& c : classes) out[c.cls.r] = c.primes_found;
    return out;
}

ScanReport average_local_params(std::uint64_t x, std::uint64_t R, std::uint64_t delta) {
    if (delta == 0) throw Error(Errc::OutOfRange, "delta must be positive");
    ScanReport rep;
    rep.x = x;
    rep.R = R;
    rep.delta = delta;
    const auto moduli = admissible_moduli(R, delta);

    for (std::uint64_t P : primes_one_mod_five(x)) {
        const std::uint64_t n = local_count(P, delta, moduli);
        rep.n_of_p[P] = n;
        rep.total_by_prime += n;
        ++rep.population;
    }

    const double li_x = offset_li(static_cast<double>(x));
    for (std::uint64_t r : moduli) {
        ClassScan scan;
        scan.cls = build_progression_class(delta, r);
        const auto primes = scan_class_primes(scan.cls, x);
        scan.primes_found = primes.size();
        if (!primes.empty()) scan.first_prime = primes.front();
        scan.exceptional = primes.empty();
        scan.li_deviation =
            std::abs(static_cast<double>(primes.size()) - li_x / euler_phi(from_u64(scan.cls.modulus)).get_d());
        rep.total_by_class += scan.primes_found;
        if (scan.exceptional) rep.exceptional.push_back(r);
        rep.phi_sum = rep.phi_sum + unit(euler_phi(from_u64(scan.cls.modulus)));
        rep.classes.push_back(std::move(scan));
    }
    if (rep.population > 0) rep.average = Rational(from_u64(rep.total_by_prime), from_u64(rep.population));
    return rep;
}

std::vector<std::uint64_t> exceptional_set(std::uint64_t x, std::uint64_t R, std::uint64_t delta) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r : admissible_moduli(R, delta))
        if (scan_class_primes(build_progression_class(delta, r), x).empty()) out.push_back(r);
    return out;
}

GrowthFit fit_average_growth(std::uint64_t x, std::uint64_t delta, std::span<const std::uint64_t> Rs) {
    GrowthFit fit;
    fit.x = x;
    fit.delta = delta;
    fit.R.assign(Rs.begin(), Rs.end());
    std::sort(fit.R.begin(), fit.R.end());
    const auto primes = primes_one_mod_five(x);
    for (std::uint64_t R : fit.R) {
        const auto moduli = admissible_moduli(R, delta);
        std::uint64_t total = 0;
        for (std::uint64_t P : primes) total += local_count(P, delta, moduli);
        fit.mean.push_back(primes.empty() ? Rational() : Rational(from_u64(total), from_u64(primes.size())));
    }
    const std::size_t n = fit.R.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lx = std::log(static_cast<double>(fit.R[i]));
            const double y = fit.mean[i].approx();
            sx += lx;
            sy += y;
            sxx += lx * lx;
            sxy += lx * y;
        }
        fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        fit.intercept = (sy - fit.slope * sx) / n;
        for (std::size_t i = 0; i < n; ++i)
            fit.residuals.push_back(fit.mean[i].approx() -
                                    (fit.slope * std::log(static_cast<double>(fit.R[i])) + fit.intercept));
    }
    return fit;
}

std::string classes_csv(const std::vector<ClassScan>& classes) {
    std::ostringstream os;
    os << "delta,r,modulus,residue,primes_found,first_prime,exceptional\n";
    for (const auto& c : classes) {
        os << c.cls.delta << ',' << c.cls.r << ',' << c.cls.modulus << ',' << c.cls.residue << ',' << c.primes_found
           << ',';
        if (c.first_prime) os << *c.first_prime;
        os << ',' << (c.exceptional ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace serp
