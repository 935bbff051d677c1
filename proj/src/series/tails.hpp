#ifndef COSPROD_SRC_SERIES_TAILS_HPP
#define COSPROD_SRC_SERIES_TAILS_HPP

#include <optional>
#include <vector>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod::detail
{

/// Guard bits added to the working precision inside series evaluations.
inline constexpr Bits series_guard = 64;

/// log2 of the truncation error the series aim for: min(tolerance, 2^-bits) / 16.
double goal_log2(const PrecisionPolicy &policy);

/// Upper bound of |x| as a double (rounded up).
double magnitude_upper(const Real &x);

/// 2^e as a 64-bit BigFloat.
BigFloat power_of_two(long e);

/// Smallest K >= 1 with (2 |x| / ((2K+1) pi))^2 <= ratio.
unsigned long cut_for_ratio(const Real &x, double ratio);

/// Precision that keeps `count` zeta-moment tails past K accurate after they
/// are scaled by up to ((2K+1)^2 / 16)^i.
Bits moment_bits(Bits work, unsigned long count, unsigned long cut);

/// tails[i] = sum_{k>=K} (2k+1)^(-2i) for i = 1..count; tails[0] is unused.
/// Computed as lambda(2i) minus an exact rational partial sum, at pi_value's precision.
std::vector<Real> odd_moment_tails(unsigned long count, unsigned long cut, const Real &pi_value);

/// f(t) = sum_i weights[i] (scale t + shifts[i])^(-m).
struct PowerFamily {
    Real scale;
    std::vector<Real> shifts;
    std::vector<long> weights;
    unsigned long m;
};

Real evaluate(const PowerFamily &f, const Real &t);

/// Enclosure of sum_{k>=M} f(k) by Euler-Maclaurin, valid when f is completely
/// monotone on [M, inf). Correction terms are added until one drops below
/// 2^goal; twice that term bounds the remainder and is written to `remainder`.
/// Returns nullopt when the corrections start growing first (M too small).
std::optional<Real> euler_maclaurin_tail(const PowerFamily &f, unsigned long cut, double goal, Real &remainder);

/// Ball spanning [lower(lo), upper(hi)].
Real span(const Real &lo, const Real &hi);

/// Radius-sized upper bound of the width of span(lo, hi).
double span_width(const Real &lo, const Real &hi);

} // namespace cosprod::detail

#endif
