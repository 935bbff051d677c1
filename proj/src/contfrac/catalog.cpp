#include <cosprod/contfrac/catalog.hpp>

#include <cmath>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/errors.hpp>

namespace cosprod
{

namespace
{

Rational odd_square(unsigned long k)
{
    const long v = static_cast<long>(k);
    return Rational(v * v);
}

// Singular convergents are skipped by looking back at most this many indices.
constexpr unsigned long kLookBack = 16;

} // namespace

Gcf cf_pi_eq5()
{
    return Gcf("pi-eq5", Rational(0), [](unsigned long k) -> Gcf::Term {
        if (k == 1) {
            return {Rational(4), Rational(1)};
        }
        return {odd_square(2 * k - 3), Rational(2)};
    });
}

Gcf cf_pi_eq6()
{
    return Gcf("pi-eq6", Rational(3), [](unsigned long k) -> Gcf::Term { return {odd_square(2 * k - 1), Rational(6)}; });
}

Gcf cf_quarter_pi_thm21()
{
    return Gcf("quarter-pi", Rational(2, 3), [](unsigned long k) -> Gcf::Term {
        if (k == 1) {
            return {Rational(1), Rational(5)};
        }
        return {odd_square(2 * k + 1), Rational(2)};
    });
}

Gcf cf_thm26(unsigned long n, Thm26Leading leading)
{
    if (n == 0) {
        throw DomainError("the tanh/tan continued fraction needs n >= 1");
    }
    const Integer m = Integer((2 * n + 1) * (2 * n + 1));
    const Rational start = leading == Thm26Leading::printed ? Rational(Integer(m + 1)) : Rational(m);
    return Gcf("tanh-tan-n" + std::to_string(n), start, [m](unsigned long k) -> Gcf::Term {
        const unsigned long j = (k + 1) / 2;
        const Integer base = Integer((2 * j - 1) * (2 * j - 1)) * m;
        if (k % 2 == 1) {
            const Integer a = base + 1;
            return {Rational(Integer(a * a)), Rational(-2)};
        }
        const Integer a = base - 1;
        return {Rational(Integer(a * a)), Rational(Integer(8 * j * m + 2))};
    });
}

TrendEstimate trend_estimate(const Gcf &cf, unsigned long depth, Bits bits)
{
    unsigned long half = depth / 2;
    if (half % 2 != depth % 2) {
        half += 1;
    }
    ConvergentStream stream(cf);
    std::optional<Real> at_half;
    std::optional<Real> at_depth;
    unsigned long half_index = 0;
    unsigned long depth_index = 0;
    std::size_t singular = 0;
    for (;;) {
        const unsigned long k = stream.index();
        if (stream.singular()) {
            ++singular;
        } else if (k % 2 == depth % 2) {
            if (k <= half && k + kLookBack >= half) {
                at_half = stream.value(bits);
                half_index = k;
            }
            if (k + kLookBack >= depth) {
                at_depth = stream.value(bits);
                depth_index = k;
            }
        }
        if (k == depth) {
            break;
        }
        stream.advance();
    }
    if (!at_depth) {
        throw SingularConvergentError(cf.name() + ": no regular convergent of the requested parity near the depth");
    }
    Real value = at_depth->with_precision(bits);
    if (at_half && half_index != depth_index) {
        // Errors of order 1/d make |c_d - c_(d/2)| equal the error itself.
        value = value.add_error((abs(*at_depth - *at_half) * 2).upper());
    }
    return TrendEstimate{value, depth_index, half_index, singular};
}

std::string_view to_string(Thm26Leading leading)
{
    return leading == Thm26Leading::printed ? "leading (2n+1)^2+1" : "leading (2n+1)^2";
}

std::string_view to_string(Thm26Sign sign)
{
    return sign == Thm26Sign::signed_lhs ? "signed value" : "negated value";
}

Real thm26_target(unsigned long n, Thm26Sign sign, const PrecisionPolicy &policy)
{
    const Bits work = policy.working_bits() + 32;
    const long big_n = static_cast<long>(2 * n + 1);
    const Real p = pi(work);
    const Real y = p / (2 * big_n);
    const Real s = ldexp(p, -2) * (tanh(y) - tan(y)) / big_n;
    const Real target = sign == Thm26Sign::signed_lhs ? inverse(s) : -inverse(s);
    return target.with_precision(policy.working_bits());
}

Thm26Study study_thm26(unsigned long n, unsigned long depth, double agreement, const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const unsigned long odd_depth = depth % 2 == 1 ? depth : depth - 1;
    const unsigned long even_depth = depth % 2 == 0 ? depth : depth - 1;
    const Gcf printed = cf_thm26(n, Thm26Leading::printed);
    Thm26Study study{n, trend_estimate(printed, odd_depth, bits), trend_estimate(printed, even_depth, bits), {}, {}};

    for (Thm26Leading leading : {Thm26Leading::printed, Thm26Leading::bare}) {
        // Changing b_0 shifts every convergent by the same amount.
        const Real estimate = leading == Thm26Leading::printed ? study.odd.value : study.odd.value - 1;
        for (Thm26Sign sign : {Thm26Sign::signed_lhs, Thm26Sign::negated_lhs}) {
            const Real target = thm26_target(n, sign, policy);
            const double gap = std::fabs((estimate - target).mid_double());
            const bool matches = gap <= agreement && estimate.rad_double() <= agreement;
            study.readings.push_back(Thm26Reading{leading, sign, target, estimate, gap, matches});
            if (matches && !study.resolved) {
                study.resolved = study.readings.size() - 1;
            }
        }
    }
    return study;
}

} // namespace cosprod
