#include "tails.hpp"

#include <algorithm>
#include <cmath>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/rational.hpp>

namespace cosprod::detail
{

namespace
{

Integer rising_factorial(unsigned long s, unsigned long k)
{
    Integer out = 1;
    for (unsigned long i = 0; i < k; ++i) {
        out *= s + i;
    }
    return out;
}

double log2_upper(const Real &x)
{
    const BigFloat up = abs(x).upper();
    if (up.is_zero()) {
        return -HUGE_VAL;
    }
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, up.get(), MPFR_RNDU);
    return static_cast<double>(e) + std::log2(m);
}

} // namespace

double goal_log2(const PrecisionPolicy &policy)
{
    return std::min(policy.tolerance_log2(), -static_cast<double>(policy.working_bits())) - 4.0;
}

double magnitude_upper(const Real &x)
{
    return mpfr_get_d(abs(x).upper().get(), MPFR_RNDU);
}

BigFloat power_of_two(long e)
{
    BigFloat out(64);
    mpfr_set_ui_2exp(out.get(), 1u, e, MPFR_RNDN);
    return out;
}

unsigned long cut_for_ratio(const Real &x, double ratio)
{
    // pi > 3.14159, so this over-estimates the needed denominator.
    const double needed = 2.0 * magnitude_upper(x) / (3.14159 * std::sqrt(ratio));
    const double k = std::ceil((needed - 1.0) / 2.0);
    return std::max(1ul, static_cast<unsigned long>(std::max(0.0, k)) + 1);
}

Bits moment_bits(Bits work, unsigned long count, unsigned long cut)
{
    const double per_step = std::max(0.0, 2.0 * std::log2(2.0 * static_cast<double>(cut) + 1.0) - 4.0);
    return work + static_cast<Bits>(std::ceil(per_step * static_cast<double>(count))) + 16;
}

std::vector<Real> odd_moment_tails(unsigned long count, unsigned long cut, const Real &pi_value)
{
    const Bits bits = pi_value.precision();
    std::vector<Real> tails;
    tails.reserve(count + 1);
    tails.emplace_back(0, bits);
    for (unsigned long i = 1; i <= count; ++i) {
        Rational head;
        for (unsigned long k = 0; k < cut; ++k) {
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), 2 * k + 1, 2 * i);
            head += Rational(Integer(1), q);
        }
        tails.push_back(lambda_odd_denominator(i, pi_value) - Real::from_rational(head, bits));
    }
    return tails;
}

Real evaluate(const PowerFamily &f, const Real &t)
{
    Real sum(0, t.precision());
    for (std::size_t i = 0; i < f.shifts.size(); ++i) {
        sum += pow(inverse(f.scale * t + f.shifts[i]), f.m) * f.weights[i];
    }
    return sum;
}

std::optional<Real> euler_maclaurin_tail(const PowerFamily &f, unsigned long cut, double goal, Real &remainder)
{
    const Bits bits = f.scale.precision();
    const Real t = Real(static_cast<long>(cut), bits);
    std::vector<Real> base; // scale M + s_i
    std::vector<Real> inv;
    for (const Real &s : f.shifts) {
        base.push_back(f.scale * t + s);
        inv.push_back(inverse(base.back()));
    }

    Real integral(0, bits);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (f.m == 1) {
            integral -= log(base[i]) * f.weights[i];
        } else {
            integral += pow(inv[i], f.m - 1) * f.weights[i];
        }
    }
    integral /= f.scale;
    if (f.m > 1) {
        integral /= static_cast<long>(f.m - 1);
    }

    Real sum = integral + ldexp(evaluate(f, t), -1);

    // powers[i] = (scale M + s_i)^(-m-2j+1), starting at j = 1.
    std::vector<Real> powers;
    for (const Real &v : inv) {
        powers.push_back(pow(v, f.m + 1));
    }
    Real scale_power = f.scale; // scale^(2j-1)
    const Real scale_sq = sqr(f.scale);
    const double base_low = mpfr_get_d(abs(base.front()).lower().get(), MPFR_RNDD);
    const auto max_j = static_cast<unsigned long>(std::max(2.0, base_low));

    for (unsigned long j = 1; j <= max_j; ++j) {
        if (j > 1) {
            scale_power *= scale_sq;
            for (std::size_t i = 0; i < powers.size(); ++i) {
                powers[i] *= sqr(inv[i]);
            }
        }
        Real diff(0, bits);
        for (std::size_t i = 0; i < powers.size(); ++i) {
            diff += powers[i] * f.weights[i];
        }
        // -B_2j/(2j)! f^(2j-1)(M) = B_2j/(2j)! (m)_{2j-1} scale^(2j-1) sum w_i (scale M + s_i)^(-m-2j+1)
        const Rational c = bernoulli(2 * j) * Rational(rising_factorial(f.m, 2 * j - 1)) / Rational(factorial(2 * j));
        const Real term = diff * scale_power * c;
        if (log2_upper(term) < goal) {
            remainder = Real::from_mid_rad(BigFloat(64, 0), ldexp(abs(term), 1).upper());
            return sum.add_error(remainder.rad());
        }
        sum += term;
    }
    return std::nullopt;
}

Real span(const Real &lo, const Real &hi)
{
    const BigFloat a = lo.lower();
    const BigFloat b = hi.upper();
    if (mpfr_cmp(a.get(), b.get()) > 0) {
        return hull(lo, hi);
    }
    return Real::from_bounds(a, b, std::max(lo.precision(), hi.precision()));
}

double span_width(const Real &lo, const Real &hi)
{
    return 2.0 * span(lo, hi).rad_double();
}

} // namespace cosprod::detail
