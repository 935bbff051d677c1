#ifndef COSPROD_SERIES_SERIES_HPP
#define COSPROD_SERIES_SERIES_HPP

#include <string_view>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

enum class SeriesStrategy {
    /// Partial sum plus a two-sided integral enclosure of the tail.
    direct_integral_tail,
    /// Partial sum plus a tail expanded in odd-denominator zeta moments.
    zeta_accelerated,
    /// Partial sum plus an Euler-Maclaurin tail with a bounded remainder.
    euler_maclaurin,
    /// Truncated power series with a geometric remainder bound.
    power_series,
};

std::string_view to_string(SeriesStrategy strategy);

/// Enclosure of an infinite sum or product.
///
/// `tail_bound` is the truncation error bound that has already been folded
/// into `value`'s radius; `terms_used` counts the explicitly summed terms.
struct SeriesResult {
    Real value;
    unsigned long terms_used;
    Real tail_bound;
    SeriesStrategy strategy;
};

/// sum_{k>=0} 1 / (((2k+1) pi)^2 - 4x^2), which equals tan(x) / (8x).
///
/// The first K terms are summed directly, with K chosen so that
/// u = (2x / ((2K+1) pi))^2 <= 1/16. The rest is expanded as
/// sum_j (2x)^(2j) pi^(-2j-2) M_j with M_j = sum_{k>=K} (2k+1)^(-2j-2),
/// and the j-series is cut with the remainder u^(J+1) / (1 - u) M_0 / pi^2.
/// Throws PoleStraddleError when 2x may equal an odd multiple of pi.
SeriesResult odd_partial_fraction_sum(const Real &x, const PrecisionPolicy &policy);

/// Plain partial sum of the first `terms` terms of the same series, no tail.
Real odd_partial_fraction_partial_sum(const Real &x, unsigned long terms, const PrecisionPolicy &policy);

/// 1/3 = sum_{k>=1} 1 / ((2k-1)(2k+3)).
Rational telescoping_third();

/// Exact partial sum S_K = (1 + 1/3 - 1/(2K+1) - 1/(2K+3)) / 4.
Rational telescoping_partial_sum(unsigned long terms);

/// sum_{k>=1} (1/(4k+1) - 1/(4k+3)) = (3 pi - 8) / 12.
SeriesResult leibniz_tail_sum(const PrecisionPolicy &policy = PrecisionPolicy());

/// sum_{k>=1} (1 / (((2k+1) pi)^2 - 4x^2))^(n+1), for n >= 1.
///
/// The tail after K terms is convex and decreasing, so it lies between
/// int_K^inf g + g(K)/2 and int_{K-1/2}^inf g. K grows until that window is
/// narrower than the policy tolerance.
SeriesResult power_partial_fraction_sum(const Real &x, unsigned long n, const PrecisionPolicy &policy);

/// sum_{k>=0} (((2k+1) pi - 2x)^(1-2n) - ((2k+1) pi + 2x)^(1-2n)), for n >= 1.
///
/// Equals tan^(2n-2)(x) / (2^(2n-1) (2n-2)!). For x > 0 each summand is
/// completely monotone in k, which makes the Euler-Maclaurin remainder at
/// most the first omitted correction. Negative x uses oddness in x.
/// Throws DomainError if x is an inexact ball containing zero.
SeriesResult odd_power_difference_sum(const Real &x, unsigned long n, const PrecisionPolicy &policy);

/// 8 N^2 cos^2(pi/N) sum_{k>=0} (4 + N^2 q^2) / (4 - N^2 q^2)^2 with N = 2n+1, q = 2k+1.
///
/// Each summand is (N q)^(-2) sum_j (2j+1) (4 / (N q)^2)^j, so the tail is a
/// series in odd-denominator zeta moments, cut once w = 4 / (N (2K+1))^2 <= 1/16.
SeriesResult pi_squared_series(long n, const PrecisionPolicy &policy);

/// sqrt(2 sum_{k>=0} (4 + q^2) / (4 - q^2)^2), which equals pi / 2.
SeriesResult half_pi_series(const PrecisionPolicy &policy);

/// sum_{k>=0} (1/(q^2 pi^2 + 4x^2) - 1/(q^2 pi^2 - 4x^2)) = (tanh x - tan x) / (8x).
///
/// Terms are summed in the paired form -8x^2 / (q^4 pi^4 - 16 x^4) with a
/// convex integral sandwich on the tail.
SeriesResult tanh_tan_difference_sum(const Real &x, const PrecisionPolicy &policy);

enum class ProductVariant { cos, cosh, cosh_cos };

std::string_view to_string(ProductVariant variant);

/// Infinite products over u_k = (2x / ((2k+1) pi))^2:
/// cos x = prod (1 - u_k), cosh x = prod (1 + u_k), cosh x cos x = prod (1 - u_k^2).
///
/// K factors are multiplied out; the logarithm of the remaining factors is
/// expanded in odd-denominator zeta moments with a geometric remainder.
SeriesResult cos_product(const Real &x, ProductVariant variant, const PrecisionPolicy &policy);

enum class LogCoshMethod { product_log, euler_series, zeta_series };

std::string_view to_string(LogCoshMethod method);

/// log cosh x by one of three expansions.
///
/// product_log sums log(1 + u_k) and works for any finite x. The two power
/// series have coefficient magnitude (2/pi)^(2k) lambda(2k) / k and require
/// |x| < pi/2 on the whole interval, else ConvergenceDomainError.
SeriesResult log_cosh(const Real &x, LogCoshMethod method, const PrecisionPolicy &policy);

/// tanh x = -sum_{k>=1} E_{2k-1} 2^(2k-1) x^(2k-1) / (2k-1)!, for |x| < pi/2.
/// Throws ConvergenceDomainError outside that disc.
Real tanh_series(const Real &x, const PrecisionPolicy &policy);

} // namespace cosprod

#endif
