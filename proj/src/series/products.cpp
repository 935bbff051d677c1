#include <cosprod/series/series.hpp>

#include <cmath>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/errors.hpp>

#include "tails.hpp"

namespace cosprod
{

namespace
{

struct LogTail {
    Real value;
    Real remainder;
};

// Coefficient c_i in log(factor) = sum_i c_i u^i; |c_i| <= 1.
Rational log_coefficient(ProductVariant variant, unsigned long i)
{
    const long li = static_cast<long>(i);
    switch (variant) {
        case ProductVariant::cos:
            return Rational(-1, li);
        case ProductVariant::cosh:
            return Rational(i % 2 == 1 ? 1 : -1, li);
        case ProductVariant::cosh_cos:
            return i % 2 == 0 ? Rational(-2, li) : Rational(0);
    }
    return Rational(0);
}

// sum_{k>=K} log(factor_k) = sum_i c_i y^i M_i with y = (2x/pi)^2, M_i = sum_{k>=K} (2k+1)^(-2i).
// Since M_i <= (2K+1)^(2-2i) M_1, the part past I is at most
// (2K+1)^2 M_1 u^(I+1) / (1-u) with u = y / (2K+1)^2.
LogTail log_tail(const Real &x, ProductVariant variant, unsigned long cut, const PrecisionPolicy &policy)
{
    const Bits work = policy.working_bits() + detail::series_guard;
    const double goal = detail::goal_log2(policy);
    const double d = 2.0 * static_cast<double>(cut) + 1.0;
    const double u_est = std::pow(2.0 * detail::magnitude_upper(x) / (d * 3.14159), 2.0);
    unsigned long count = 1;
    if (u_est > 0.0) {
        const double front = std::log2(d * d * 0.25 * 16.0 / 15.0);
        count = static_cast<unsigned long>(std::ceil((goal - front) / std::log2(u_est)));
        count = std::max(count, 2ul);
    }

    const Bits pbits = detail::moment_bits(work, count, cut);
    const Real p = pi(pbits);
    const std::vector<Real> tails = detail::odd_moment_tails(count, cut, p);
    const Real y = sqr(x * 2 / p);

    Real sum(0, pbits);
    Real y_power = y;
    for (unsigned long i = 1; i <= count; ++i) {
        const Rational c = log_coefficient(variant, i);
        if (!c.is_zero()) {
            sum += y_power * tails[i] * c;
        }
        y_power *= y;
    }

    const long dl = static_cast<long>(2 * cut + 1);
    const Real u = y / (dl * dl);
    Real remainder = tails[1] * (dl * dl) * pow(u, count + 1) / (1 - u);
    remainder = Real::from_mid_rad(BigFloat(64, 0), abs(remainder).upper());
    return LogTail{sum.add_error(remainder.rad()), remainder};
}

Real factor(const Real &u, ProductVariant variant)
{
    switch (variant) {
        case ProductVariant::cos:
            return 1 - u;
        case ProductVariant::cosh:
            return 1 + u;
        case ProductVariant::cosh_cos:
            return 1 - sqr(u);
    }
    return u;
}

void require_inside_disc(const Real &x, const Real &p)
{
    if (!(ldexp(p, -1) - abs(x)).is_positive()) {
        throw ConvergenceDomainError("power series needs |x| < pi/2 on the whole argument interval");
    }
}

// Smallest N with 1.25 r^(N+1) / ((N+1)(1-r)) below 2^goal, using the double estimate of r.
unsigned long series_terms(double r, double goal)
{
    if (r == 0.0) {
        return 1;
    }
    unsigned long n = 1;
    while (std::log2(1.25) + (n + 1) * std::log2(r) - std::log2(n + 1.0) - std::log2(1.0 - r) >= goal) {
        ++n;
    }
    return n;
}

} // namespace

std::string_view to_string(ProductVariant variant)
{
    switch (variant) {
        case ProductVariant::cos:
            return "cos";
        case ProductVariant::cosh:
            return "cosh";
        case ProductVariant::cosh_cos:
            return "cosh*cos";
    }
    return "?";
}

std::string_view to_string(LogCoshMethod method)
{
    switch (method) {
        case LogCoshMethod::product_log:
            return "product-log";
        case LogCoshMethod::euler_series:
            return "euler-series";
        case LogCoshMethod::zeta_series:
            return "zeta-series";
    }
    return "?";
}

SeriesResult cos_product(const Real &x, ProductVariant variant, const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const Bits work = bits + detail::series_guard;
    if (x.is_exact() && x.mid().is_zero()) {
        return SeriesResult{Real(1, bits), 1, Real(0, 64), SeriesStrategy::zeta_accelerated};
    }
    const unsigned long cut = detail::cut_for_ratio(x, 1.0 / 16.0);
    const Real p = pi(work);
    Real product(1, work);
    for (unsigned long k = 0; k < cut; ++k) {
        const Real u = sqr(x * 2 / (p * static_cast<long>(2 * k + 1)));
        product *= factor(u, variant);
    }
    const LogTail tail = log_tail(x, variant, cut, policy);
    const Real value = product * exp(tail.value.with_precision(work));
    return SeriesResult{value.with_precision(bits), cut, tail.remainder, SeriesStrategy::zeta_accelerated};
}

SeriesResult log_cosh(const Real &x, LogCoshMethod method, const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const Bits work = bits + detail::series_guard;
    const Real p = pi(work);

    if (method == LogCoshMethod::product_log) {
        if (x.is_exact() && x.mid().is_zero()) {
            return SeriesResult{Real(0, bits), 1, Real(0, 64), SeriesStrategy::zeta_accelerated};
        }
        const unsigned long cut = detail::cut_for_ratio(x, 1.0 / 16.0);
        Real sum(0, work);
        for (unsigned long k = 0; k < cut; ++k) {
            sum += log(1 + sqr(x * 2 / (p * static_cast<long>(2 * k + 1))));
        }
        const LogTail tail = log_tail(x, ProductVariant::cosh, cut, policy);
        return SeriesResult{(sum + tail.value).with_precision(bits), cut, tail.remainder,
                            SeriesStrategy::zeta_accelerated};
    }

    require_inside_disc(x, p);
    const Real r = sqr(abs(x) * 2 / p);
    const unsigned long terms = series_terms(mpfr_get_d(r.upper().get(), MPFR_RNDU), detail::goal_log2(policy));

    Real sum(0, work);
    const Real x_sq = sqr(x.precision() < work ? x.with_precision(work) : x);
    const Real y = sqr(x * 2 / p);
    Real x_power = x_sq;
    Real y_power = y;
    for (unsigned long k = 1; k <= terms; ++k) {
        if (method == LogCoshMethod::euler_series) {
            Integer two_power;
            mpz_ui_pow_ui(two_power.get_mpz_t(), 2, 2 * k - 1);
            const Rational c = -euler(2 * k - 1) * Rational(two_power) /
                               Rational(Integer(factorial(2 * k - 1) * (2 * k)));
            sum += x_power * c;
        } else {
            Real term = y_power * lambda_odd_denominator(k, p) / static_cast<long>(k);
            sum += k % 2 == 1 ? term : -term;
        }
        x_power *= x_sq;
        y_power *= y;
    }

    Real remainder = pow(r, terms + 1) * Rational(5, 4) / (static_cast<long>(terms + 1) * (1 - r));
    remainder = Real::from_mid_rad(BigFloat(64, 0), abs(remainder).upper());
    return SeriesResult{sum.add_error(remainder.rad()).with_precision(bits), terms, remainder,
                        SeriesStrategy::power_series};
}

Real tanh_series(const Real &x, const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const Bits work = bits + detail::series_guard;
    const Real p = pi(work);
    require_inside_disc(x, p);

    // |term_k| = (4/pi) lambda(2k) R^(2k-1) <= 1.6 R^(2k-1), R = 2|x|/pi.
    const Real big_r = abs(x) * 2 / p;
    const double r_est = mpfr_get_d(big_r.upper().get(), MPFR_RNDU);
    const double goal = detail::goal_log2(policy);
    unsigned long terms = 1;
    if (r_est > 0.0) {
        while (std::log2(1.6) + (2.0 * terms + 1.0) * std::log2(r_est) - std::log2(1.0 - r_est * r_est) >= goal) {
            ++terms;
        }
    }

    const Real xw = x.precision() < work ? x.with_precision(work) : x;
    const Real x_sq = sqr(xw);
    Real x_power = xw;
    Real sum(0, work);
    for (unsigned long k = 1; k <= terms; ++k) {
        Integer two_power;
        mpz_ui_pow_ui(two_power.get_mpz_t(), 2, 2 * k - 1);
        const Rational c = -euler(2 * k - 1) * Rational(two_power) / Rational(factorial(2 * k - 1));
        sum += x_power * c;
        x_power *= x_sq;
    }
    Real remainder = pow(big_r, 2 * terms + 1) * Rational(8, 5) / (1 - sqr(big_r));
    return sum.add_error(abs(remainder).upper()).with_precision(bits);
}

} // namespace cosprod
