#include <cosprod/series/series.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/errors.hpp>

#include "tails.hpp"

namespace cosprod
{

using detail::series_guard;

namespace
{

constexpr unsigned long kMaxSandwichCut = 1ul << 22;

// Cut for an Euler-Maclaurin tail: the corrections bottom out near e^(-2 pi M).
unsigned long em_cut(double goal, const Real &x)
{
    const double base = std::ceil(-goal * std::log(2.0) / (2.0 * M_PI)) + 8.0;
    return static_cast<unsigned long>(base + std::ceil(detail::magnitude_upper(x) / M_PI));
}

Real two_sided(const Real &lo, const Real &hi)
{
    return detail::span(lo, hi);
}

// Smallest K (found by doubling from `start`, then bisection) whose sandwich
// window is at most 2^goal wide, capped at kMaxSandwichCut.
unsigned long sandwich_cut(unsigned long start, double goal, const std::function<double(unsigned long)> &width)
{
    const double target = std::ldexp(1.0, static_cast<int>(std::floor(goal)));
    unsigned long hi = start;
    while (width(hi) > target && hi < kMaxSandwichCut) {
        hi *= 2;
    }
    if (hi == start) {
        return start;
    }
    unsigned long lo = hi / 2;
    while (hi - lo > 1 && hi - lo > hi / 64) {
        const unsigned long mid = lo + (hi - lo) / 2;
        if (width(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double tolerance_goal(const PrecisionPolicy &policy)
{
    return policy.tolerance_log2() - 2.0;
}

Real inverse_odd_power(unsigned long d, unsigned long e, Bits bits)
{
    return inverse(pow(Real(static_cast<long>(d), bits), e));
}

} // namespace

std::string_view to_string(SeriesStrategy strategy)
{
    switch (strategy) {
        case SeriesStrategy::direct_integral_tail:
            return "direct+integral-tail";
        case SeriesStrategy::zeta_accelerated:
            return "zeta-accelerated";
        case SeriesStrategy::euler_maclaurin:
            return "direct+euler-maclaurin";
        case SeriesStrategy::power_series:
            return "power-series";
    }
    return "?";
}

SeriesResult odd_partial_fraction_sum(const Real &x, const PrecisionPolicy &policy)
{
    require_no_tan_pole(x);
    const Bits bits = policy.working_bits();
    const Bits work = bits + series_guard;
    const unsigned long cut = detail::cut_for_ratio(x, 1.0 / 16.0);
    const double goal = detail::goal_log2(policy);

    const double u_est = std::pow(2.0 * detail::magnitude_upper(x) / ((2.0 * cut + 1.0) * 3.14159), 2.0);
    unsigned long count = 1;
    if (u_est > 0.0) {
        // M_0 / pi^2 < 1/16 and 1 / (1 - u) < 16/15.
        count = static_cast<unsigned long>(std::ceil((goal + 4.0) / std::log2(u_est))) + 1;
        count = std::max(count, 1ul);
    }
    const Bits pbits = detail::moment_bits(work, count, cut);
    const Real p = pi(pbits);
    const std::vector<Real> tails = detail::odd_moment_tails(count, cut, p);

    const Real four_x2 = sqr(x) * 4;
    const Real p_sq = sqr(p);

    Real direct(0, work);
    for (unsigned long k = 0; k < cut; ++k) {
        const long q = static_cast<long>(2 * k + 1);
        direct += inverse(p_sq * (q * q) - four_x2);
    }

    Real tail(0, pbits);
    Real weight = inverse(p_sq); // (4x^2)^j / pi^(2j+2)
    const Real step = four_x2 / p_sq;
    for (unsigned long j = 0; j < count; ++j) {
        tail += weight * tails[j + 1];
        weight *= step;
    }

    const long d = static_cast<long>(2 * cut + 1);
    const Real u = four_x2 / (p_sq * (d * d));
    const Real one_minus = 1 - u;
    if (!one_minus.is_positive()) {
        throw std::logic_error("tail ratio of the odd partial-fraction sum is not below 1");
    }
    Real remainder = tails[1] / p_sq * pow(u, count) / one_minus;
    remainder = Real::from_mid_rad(BigFloat(64, 0), abs(remainder).upper());

    const Real value = (direct + tail).add_error(remainder.rad()).with_precision(bits);
    return SeriesResult{value, cut, remainder, SeriesStrategy::zeta_accelerated};
}

Real odd_partial_fraction_partial_sum(const Real &x, unsigned long terms, const PrecisionPolicy &policy)
{
    require_no_tan_pole(x);
    const Bits work = policy.working_bits() + series_guard;
    const Real p_sq = sqr(pi(work));
    const Real four_x2 = sqr(x) * 4;
    Real sum(0, work);
    for (unsigned long k = terms; k-- > 0;) {
        const Real q = Real(static_cast<long>(2 * k + 1), work);
        sum += inverse(p_sq * sqr(q) - four_x2);
    }
    return sum.with_precision(policy.working_bits());
}

Rational telescoping_third()
{
    // 1/((2k-1)(2k+3)) = (1/(2k-1) - 1/(2k+3)) / 4 leaves 1 + 1/3 uncancelled.
    return (Rational(1) + Rational(1, 3)) / Rational(4);
}

Rational telescoping_partial_sum(unsigned long terms)
{
    const long n = static_cast<long>(terms);
    return (Rational(1) + Rational(1, 3) - Rational(1, 2 * n + 1) - Rational(1, 2 * n + 3)) / Rational(4);
}

SeriesResult leibniz_tail_sum(const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const Bits work = bits + series_guard;
    const double goal = detail::goal_log2(policy);
    unsigned long cut = em_cut(goal, Real());

    const detail::PowerFamily family{Real(4, work), {Real(1, work), Real(3, work)}, {1, -1}, 1};
    for (;;) {
        Real remainder;
        const auto tail = detail::euler_maclaurin_tail(family, cut, goal, remainder);
        if (!tail) {
            cut *= 2;
            continue;
        }
        Real direct(0, work);
        for (unsigned long k = cut - 1; k >= 1; --k) {
            direct += inverse(Real(static_cast<long>((4 * k + 1) * (4 * k + 3)), work)) * 2;
        }
        return SeriesResult{(direct + *tail).with_precision(bits), cut - 1, remainder,
                            SeriesStrategy::euler_maclaurin};
    }
}

SeriesResult power_partial_fraction_sum(const Real &x, unsigned long n, const PrecisionPolicy &policy)
{
    if (n == 0) {
        throw DomainError("power_partial_fraction_sum requires n >= 1");
    }
    require_no_tan_pole(x);
    const unsigned long m = n + 1;
    const Bits bits = policy.working_bits();
    const Bits work = bits + series_guard;

    // g(t) = ((2t+1)^2 pi^2 - 4x^2)^(-m); on t >= K - 1/2 it is positive, decreasing and convex.
    // int_{t0}^inf g lies in [I, I (1 - u)^(-m)] with I = D^(1-2m) / (2 (2m-1) pi^(2m)),
    // D = 2 t0 + 1 and u = 4x^2 / (D pi)^2.
    struct Parts {
        Real lower;
        Real upper;
    };
    auto parts = [&](unsigned long cut, const Real &p, const Real &four_x2) {
        const Bits b = p.precision();
        const Real p_2m = pow(p, 2 * m);
        auto integral = [&](unsigned long d, bool upper) {
            Real value = inverse_odd_power(d, 2 * m - 1, b) / (p_2m * static_cast<long>(2 * (2 * m - 1)));
            if (upper) {
                const Real u = four_x2 / (sqr(p) * static_cast<long>(d * d));
                value /= pow(1 - u, m);
            }
            return value;
        };
        const long q = static_cast<long>(2 * cut + 1);
        const Real g_cut = pow(inverse(sqr(p) * (q * q) - four_x2), m);
        return Parts{integral(2 * cut + 1, false) + ldexp(g_cut, -1), integral(2 * cut, true)};
    };

    const Real p_est = pi(128);
    const Real x2_est = sqr(x.with_precision(128)) * 4;
    const unsigned long cut = sandwich_cut(std::max(2ul, detail::cut_for_ratio(x, 0.25)), tolerance_goal(policy),
                                           [&](unsigned long k) {
                                               const Parts pr = parts(k, p_est, x2_est);
                                               return detail::span_width(pr.lower, pr.upper);
                                           });

    const Real p = pi(work);
    const Real four_x2 = sqr(x) * 4;
    const Real p_sq = sqr(p);
    Real direct(0, work);
    for (unsigned long k = cut - 1; k >= 1; --k) {
        const Real q = Real(static_cast<long>(2 * k + 1), work);
        direct += pow(inverse(p_sq * sqr(q) - four_x2), m);
    }
    const Parts pr = parts(cut, p, four_x2);
    const Real tail = two_sided(pr.lower, pr.upper);
    return SeriesResult{(direct + tail).with_precision(bits), cut - 1,
                        Real::from_mid_rad(BigFloat(64, 0), tail.rad()), SeriesStrategy::direct_integral_tail};
}

SeriesResult odd_power_difference_sum(const Real &x, unsigned long n, const PrecisionPolicy &policy)
{
    if (n == 0) {
        throw DomainError("odd_power_difference_sum requires n >= 1");
    }
    const Bits bits = policy.working_bits();
    const Bits work = bits + series_guard;
    if (x.is_exact() && x.mid().is_zero()) {
        return SeriesResult{Real(0, bits), 1, Real(0, 64), SeriesStrategy::euler_maclaurin};
    }
    if (x.contains_zero()) {
        throw DomainError("odd_power_difference_sum: argument interval contains zero");
    }
    require_no_tan_pole(x);
    if (x.is_negative()) {
        SeriesResult r = odd_power_difference_sum(-x, n, policy);
        r.value = -r.value;
        return r;
    }

    const unsigned long m = 2 * n - 1;
    const double goal = detail::goal_log2(policy);
    const Real p = pi(work);
    const Real c = x * 2;
    const detail::PowerFamily family{p * 2, {p - c, p + c}, {1, -1}, m};

    unsigned long cut = em_cut(goal, x);
    for (;;) {
        Real remainder;
        const auto tail = detail::euler_maclaurin_tail(family, cut, goal, remainder);
        if (!tail) {
            cut *= 2;
            continue;
        }
        Real direct(0, work);
        for (unsigned long k = cut; k-- > 0;) {
            direct += detail::evaluate(family, Real(static_cast<long>(k), work));
        }
        return SeriesResult{(direct + *tail).with_precision(bits), cut, remainder, SeriesStrategy::euler_maclaurin};
    }
}

SeriesResult tanh_tan_difference_sum(const Real &x, const PrecisionPolicy &policy)
{
    require_no_tan_pole(x);
    const Bits bits = policy.working_bits();
    const Bits work = bits + series_guard;

    // G(t) = 2c^2 / (A^2 - c^4), A = (2t+1)^2 pi^2, c^2 = 4x^2; each summand is -G(k).
    // int_{t0}^inf G lies in [c^2 D^(-3) / (3 pi^4), that / (1 - c^4 / (D pi)^4)], D = 2 t0 + 1.
    struct Parts {
        Real lower;
        Real upper;
    };
    auto parts = [&](unsigned long cut, const Real &p, const Real &c2) {
        const Bits b = p.precision();
        const Real p4 = pow(p, 4);
        const Real c4 = sqr(c2);
        auto integral = [&](unsigned long d, bool upper) {
            Real value = c2 * inverse_odd_power(d, 3, b) / (p4 * 3);
            if (upper) {
                value /= 1 - c4 / (p4 * pow(Real(static_cast<long>(d), b), 4));
            }
            return value;
        };
        const long q = static_cast<long>(2 * cut + 1);
        const Real a = sqr(p) * (q * q);
        const Real g_cut = c2 * 2 / (sqr(a) - c4);
        return Parts{integral(2 * cut + 1, false) + ldexp(g_cut, -1), integral(2 * cut, true)};
    };

    const Real p_est = pi(128);
    const Real c2_est = sqr(x.with_precision(128)) * 4;
    const unsigned long cut = sandwich_cut(std::max(2ul, detail::cut_for_ratio(x, 0.25)), tolerance_goal(policy),
                                           [&](unsigned long k) {
                                               const Parts pr = parts(k, p_est, c2_est);
                                               return detail::span_width(pr.lower, pr.upper);
                                           });

    const Real p = pi(work);
    const Real c2 = sqr(x) * 4;
    const Real c4 = sqr(c2);
    const Real p_sq = sqr(p);
    Real direct(0, work);
    for (unsigned long k = cut; k-- > 0;) {
        const Real q = Real(static_cast<long>(2 * k + 1), work);
        const Real a = p_sq * sqr(q);
        direct += c2 * 2 / (sqr(a) - c4);
    }
    const Parts pr = parts(cut, p, c2);
    const Real tail = two_sided(pr.lower, pr.upper);
    return SeriesResult{(-(direct + tail)).with_precision(bits), cut, Real::from_mid_rad(BigFloat(64, 0), tail.rad()),
                        SeriesStrategy::direct_integral_tail};
}

} // namespace cosprod
