#include <cosprod/precision/elementary.hpp>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>

namespace cosprod
{

namespace
{

constexpr Bits kBound = 64;

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

MpfrUnary mpfr_function(Elementary f)
{
    switch (f) {
        case Elementary::tan:
            return mpfr_tan;
        case Elementary::tanh:
            return mpfr_tanh;
        case Elementary::cos:
            return mpfr_cos;
        case Elementary::cosh:
            return mpfr_cosh;
        case Elementary::log:
            return mpfr_log;
        case Elementary::sqrt:
            return mpfr_sqrt;
        case Elementary::exp:
            return mpfr_exp;
    }
    return mpfr_exp;
}

// Upper bound of sup |f'| over [lo, hi].
BigFloat derivative_bound(Elementary f, const BigFloat &lo, const BigFloat &hi)
{
    BigFloat out(kBound);
    switch (f) {
        case Elementary::cos:
        case Elementary::tanh:
            mpfr_set_ui(out.get(), 1u, MPFR_RNDU);
            break;
        case Elementary::exp:
            mpfr_exp(out.get(), hi.get(), MPFR_RNDU);
            break;
        case Elementary::cosh: {
            const BigFloat &far = mpfr_cmpabs(lo.get(), hi.get()) > 0 ? lo : hi;
            BigFloat a(far.precision());
            mpfr_abs(a.get(), far.get(), MPFR_RNDN);
            mpfr_sinh(out.get(), a.get(), MPFR_RNDU);
            break;
        }
        case Elementary::log:
            mpfr_ui_div(out.get(), 1u, lo.get(), MPFR_RNDU);
            break;
        case Elementary::sqrt: {
            BigFloat root(kBound);
            mpfr_sqrt(root.get(), lo.get(), MPFR_RNDD);
            mpfr_mul_2ui(root.get(), root.get(), 1u, MPFR_RNDD);
            mpfr_ui_div(out.get(), 1u, root.get(), MPFR_RNDU);
            break;
        }
        case Elementary::tan: {
            // |tan| is largest at an endpoint of a pole-free interval.
            BigFloat tl(kBound), th(kBound);
            mpfr_tan(tl.get(), lo.get(), MPFR_RNDA);
            mpfr_tan(th.get(), hi.get(), MPFR_RNDA);
            mpfr_abs(tl.get(), tl.get(), MPFR_RNDU);
            mpfr_abs(th.get(), th.get(), MPFR_RNDU);
            mpfr_max(out.get(), tl.get(), th.get(), MPFR_RNDU);
            mpfr_sqr(out.get(), out.get(), MPFR_RNDU);
            mpfr_add_ui(out.get(), out.get(), 1u, MPFR_RNDU);
            break;
        }
    }
    return out;
}

Real evaluate(Elementary f, const Real &x, Bits bits)
{
    const BigFloat lo = x.lower();
    const BigFloat hi = x.upper();

    if (f == Elementary::log && lo.sign() <= 0) {
        throw DomainError("log of an interval that is not strictly positive");
    }
    if (f == Elementary::sqrt) {
        if (lo.sign() < 0) {
            throw DomainError("sqrt of an interval reaching below zero");
        }
        if (lo.is_zero() && !hi.is_zero()) {
            BigFloat top(bits);
            mpfr_sqrt(top.get(), hi.get(), MPFR_RNDU);
            return Real::from_bounds(BigFloat(bits), top, bits);
        }
    }
    if (f == Elementary::tan) {
        require_no_tan_pole(x);
    }

    BigFloat value(bits);
    const int ternary = mpfr_function(f)(value.get(), x.mid().get(), MPFR_RNDN);
    Real out = Real::from_mid_rad(value, BigFloat(kBound));
    if (ternary != 0 && !value.is_zero()) {
        BigFloat half_ulp(kBound);
        mpfr_set_ui_2exp(half_ulp.get(), 1u, mpfr_get_exp(value.get()) - bits - 1, MPFR_RNDU);
        out = out.add_error(half_ulp);
    }
    if (!x.is_exact()) {
        BigFloat propagated(kBound);
        mpfr_mul(propagated.get(), derivative_bound(f, lo, hi).get(), x.rad().get(), MPFR_RNDU);
        out = out.add_error(propagated);
    }
    return out;
}

} // namespace

std::string_view to_string(Elementary f)
{
    switch (f) {
        case Elementary::tan:
            return "tan";
        case Elementary::tanh:
            return "tanh";
        case Elementary::cos:
            return "cos";
        case Elementary::cosh:
            return "cosh";
        case Elementary::log:
            return "log";
        case Elementary::sqrt:
            return "sqrt";
        case Elementary::exp:
            return "exp";
    }
    return "?";
}

void require_no_tan_pole(const Real &x)
{
    // Poles sit where x / pi - 1/2 is an integer.
    const Bits bits = x.precision() + 32;
    const Real shifted = x / pi(bits) - Real::from_rational(Rational(1, 2), bits);
    if (contains_integer(shifted)) {
        throw PoleStraddleError("tan argument interval meets a pole at pi/2 + k pi");
    }
}

Real eval_elementary(Elementary f, const Real &x, const PrecisionPolicy &policy)
{
    return evaluate(f, x, policy.working_bits());
}

Real tan(const Real &x)
{
    return evaluate(Elementary::tan, x, x.precision());
}
Real tanh(const Real &x)
{
    return evaluate(Elementary::tanh, x, x.precision());
}
Real cos(const Real &x)
{
    return evaluate(Elementary::cos, x, x.precision());
}
Real cosh(const Real &x)
{
    return evaluate(Elementary::cosh, x, x.precision());
}
Real log(const Real &x)
{
    return evaluate(Elementary::log, x, x.precision());
}
Real sqrt(const Real &x)
{
    return evaluate(Elementary::sqrt, x, x.precision());
}
Real exp(const Real &x)
{
    return evaluate(Elementary::exp, x, x.precision());
}

} // namespace cosprod
