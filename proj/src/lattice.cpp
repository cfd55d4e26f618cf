#include "serp/lattice.hpp"

#include <sstream>

namespace serp {

XY xy_transform(const Integer& bprime, const Integer& cprime) { return {bprime + cprime, cprime - bprime}; }

NormalizedPair xy_inverse(const Integer& x, const Integer& y) {
    if (mpz_odd_p(Integer(x - y).get_mpz_t()))
        throw Error(Errc::ParityViolation, "x and y must have equal parity");
    return {(x - y) / 2, (x + y) / 2};
}

BoxSpec BoxSpec::from_side(const Integer& T, const Integer& dprime) { return {T, 2, dprime, 2 * T}; }

BoxSpec BoxSpec::for_prime(const Integer& P, const Integer& dprime) { return {3 * P / 5, 2, dprime, 6 * P / 5}; }

bool BoxSpec::contains(const Integer& x, const Integer& y) const {
    return mpz_even_p(Integer(x - y).get_mpz_t()) && x > y && sgn(y) > 0 && divides(dprime, x) && x <= bound &&
           y <= bound;
}

std::vector<LatticePoint> lattice_search_m(const Integer& P, const Integer& alpha, const Integer& dprime,
                                           const Integer& m_max) {
    std::vector<LatticePoint> out;
    const Integer step = 5 * alpha;
    // Smallest m >= 1 with m = -P (mod 5*alpha).
    Integer m = mod(-P, step);
    if (m == 0) m = step;
    for (; m <= m_max; m += step) {
        const Integer sum = m * dprime;
        const Integer product = (m + P) / step;
        auto y = exact_sqrt(sum * sum - 4 * product);
        if (!y || sgn(*y) == 0) continue;
        if (mpz_odd_p(Integer(sum - *y).get_mpz_t())) continue;
        Integer bp = (sum - *y) / 2;
        Integer cp = (sum + *y) / 2;
        if (sgn(bp) <= 0 || gcd(bp, cp) != 1) continue;
        out.push_back({std::move(bp), std::move(cp), m});
    }
    return out;
}

Ed2Witness lattice_point_witness(const Integer& P, const Integer& alpha, const Integer& dprime,
                                 const LatticePoint& pt) {
    const Integer g = alpha * dprime;
    const Integer b = g * pt.bprime;
    const Integer c = g * pt.cprime;
    const Integer delta = alpha * dprime * dprime;
    return {P, delta, b, c, 5 * b - 1, 5 * c - 1, alpha * pt.bprime * pt.cprime};
}

// ---------------------------------------------------------------------------
// Sublattice classes

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

SublatticeClass::SublatticeClass(std::uint64_t a, std::uint64_t b, std::uint64_t d, std::int64_t x0, std::int64_t y0)
    : a_(a), b_(b), d_(d) {
    if (a == 0 || d == 0 || b >= a) throw Error(Errc::OutOfRange, "sublattice basis must satisfy a, d >= 1, b < a");
    const auto ia = static_cast<std::int64_t>(a), ib = static_cast<std::int64_t>(b), id = static_cast<std::int64_t>(d);
    const std::int64_t yr = floor_mod(y0, id);
    const std::int64_t j = (y0 - yr) / id;
    y0_ = static_cast<std::uint64_t>(yr);
    x0_ = static_cast<std::uint64_t>(floor_mod(x0 - floor_mod(j, ia) * ib, ia));
}

bool SublatticeClass::contains(std::int64_t x, std::int64_t y) const {
    const auto ia = static_cast<std::int64_t>(a_), id = static_cast<std::int64_t>(d_);
    const std::int64_t dy = y - static_cast<std::int64_t>(y0_);
    if (floor_mod(dy, id) != 0) return false;
    const std::int64_t j = floor_mod(dy / id, ia);
    return floor_mod(x - static_cast<std::int64_t>(x0_) - j * static_cast<std::int64_t>(b_), ia) == 0;
}

std::string SublatticeClass::describe() const {
    std::ostringstream os;
    os << "<(" << a_ << ",0),(" << b_ << "," << d_ << ")> + (" << x0_ << "," << y0_ << ")";
    return os.str();
}

std::uint64_t class_count_in_box(const SublatticeClass& cls, std::uint64_t T) {
    const std::uint64_t a = cls.a(), d = cls.d();
    std::uint64_t total = 0;
    // y runs over y0 + j*d in [1, T]; the admissible x residue shifts by b each step.
    std::uint64_t y = cls.y0() == 0 ? d : cls.y0();
    std::uint64_t j = cls.y0() == 0 ? 1 : 0;
    for (; y <= T; y += d, ++j) {
        const std::uint64_t t = (cls.x0() + (j % a) * cls.b()) % a;
        const std::uint64_t first = t == 0 ? a : t;
        if (first <= T) total += (T - first) / a + 1;
    }
    return total;
}

DensityRow density_row(const SublatticeClass& cls, std::uint64_t T) {
    DensityRow row{cls.index(), T, class_count_in_box(cls, T), {}, {}};
    row.expected = Rational(from_u64(T) * from_u64(T), from_u64(row.M));
    row.deviation = Rational(from_u64(row.count)) - row.expected;
    return row;
}

std::string density_csv(const std::vector<DensityRow>& rows) {
    std::ostringstream os;
    os << "M,T,count,expected,deviation\n";
    os.setf(std::ios::fixed);
    os.precision(6);
    for (const auto& r : rows)
        os << r.M << ',' << r.T << ',' << r.count << ',' << r.expected.approx() << ',' << r.deviation.approx() << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Window and thickening

Integer delta_window_bound(const Integer& P, const Integer& Delta) { return 1 + 2 * Delta / (5 * P); }

Integer delta_window_count(const Integer& P, const Integer& b, const Integer& c, const Integer& Delta) {
    const Integer K = (5 * b - 1) * (5 * c - 1) - 1;
    const Integer q = 5 * P;
    Integer hi, lo;
    mpz_fdiv_q(hi.get_mpz_t(), Integer(K + Delta).get_mpz_t(), q.get_mpz_t());
    mpz_cdiv_q(lo.get_mpz_t(), Integer(K - Delta).get_mpz_t(), q.get_mpz_t());
    return hi < lo ? Integer(0) : Integer(hi - lo + 1);
}

ThickeningMeasurement measure_thickening(const Integer& P, const Integer& B, const Integer& C, const Integer& Delta) {
    ThickeningMeasurement out;
    out.count = 0;
    for (Integer b = B; b <= 2 * B; ++b)
        for (Integer c = C; c <= 2 * C; ++c) out.count += delta_window_count(P, b, c, Delta);
    out.reference = (Rational(1) + Rational(Delta, P)) * Rational(B * C) + Rational(B + C);
    out.ratio = Rational(out.count) / out.reference;
    return out;
}

}  // namespace serp
