#pragma once

// Box and lattice view of the two-multiple case in normalized coordinates.

#include <cstdint>
#include <string>
#include <vector>

#include "serp/ed2.hpp"

namespace serp {

struct XY {
    Integer x, y;
    bool operator==(const XY&) const = default;
};

struct NormalizedPair {
    Integer bprime, cprime;
    bool operator==(const NormalizedPair&) const = default;
};

/// x = b' + c', y = c' - b'.
XY xy_transform(const Integer& bprime, const Integer& cprime);
/// Inverse transform; throws ParityViolation when x and y differ in parity.
NormalizedPair xy_inverse(const Integer& x, const Integer& y);

/// Region in the (x, y) plane: x = y (mod 2), x > y > 0, d' | x, x, y <= bound.
struct BoxSpec {
    Integer T;
    unsigned k = 2;
    Integer dprime = 1;
    Integer bound;

    /// bound = 2T, the image of 1 <= b', c' <= T.
    static BoxSpec from_side(const Integer& T, const Integer& dprime);
    /// bound = floor(6P/5), the image of b', c' <= 3P/5.
    static BoxSpec for_prime(const Integer& P, const Integer& dprime);

    bool contains(const Integer& x, const Integer& y) const;
};

struct LatticePoint {
    Integer bprime, cprime, m;
    bool operator==(const LatticePoint&) const = default;
};

/// Walks the diagonal x = m*d' for m = 1..m_max. For each m with 5*alpha | m + P
/// it solves b' + c' = m*d', b'*c' = (m + P)/(5*alpha) and keeps coprime roots
/// with b' < c'.
std::vector<LatticePoint> lattice_search_m(const Integer& P, const Integer& alpha, const Integer& dprime,
                                           const Integer& m_max);

/// The witness encoded by a lattice point: g = alpha*d', delta = alpha*d'^2.
Ed2Witness lattice_point_witness(const Integer& P, const Integer& alpha, const Integer& dprime,
                                 const LatticePoint& pt);

/// Affine class u0 + L in Z^2, with L spanned by (a, 0) and (b, d) (Hermite
/// normal form, 0 <= b < a). Index is a*d.
class SublatticeClass {
public:
    SublatticeClass(std::uint64_t a, std::uint64_t b, std::uint64_t d, std::int64_t x0, std::int64_t y0);

    std::uint64_t index() const { return a_ * d_; }
    bool contains(std::int64_t x, std::int64_t y) const;
    std::string describe() const;

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    std::uint64_t d() const { return d_; }
    std::uint64_t x0() const { return x0_; }
    std::uint64_t y0() const { return y0_; }

private:
    std::uint64_t a_, b_, d_;
    std::uint64_t x0_, y0_;  // reduced: y0 < d, x0 < a
};

/// Exact number of class points in [1, T]^2.
std::uint64_t class_count_in_box(const SublatticeClass& cls, std::uint64_t T);

struct DensityRow {
    std::uint64_t M, T, count;
    Rational expected;   // T^2 / M
    Rational deviation;  // count - expected
};

DensityRow density_row(const SublatticeClass& cls, std::uint64_t T);
/// CSV with header M,T,count,expected,deviation.
std::string density_csv(const std::vector<DensityRow>& rows);

/// 1 + floor(2*Delta / (5P)).
Integer delta_window_bound(const Integer& P, const Integer& Delta);
/// Number of integers delta with |(5b-1)(5c-1) - 5*P*delta - 1| <= Delta.
Integer delta_window_count(const Integer& P, const Integer& b, const Integer& c, const Integer& Delta);

/// Triples (delta, b, c) with b in [B, 2B], c in [C, 2C] and |F| <= Delta,
/// against the reference size (1 + Delta/P)*B*C + B + C.
struct ThickeningMeasurement {
    Integer count;
    Rational reference;
    Rational ratio;  // count / reference
};

ThickeningMeasurement measure_thickening(const Integer& P, const Integer& B, const Integer& C, const Integer& Delta);

}  // namespace serp
