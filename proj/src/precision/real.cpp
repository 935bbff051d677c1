#include <cosprod/precision/real.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <cosprod/precision/errors.hpp>

namespace cosprod
{

namespace
{

constexpr Bits kRad = Real::radius_bits;

// 2^(EXP(x) - prec(x) - 1): half an ulp of a non-zero x.
BigFloat half_ulp(const BigFloat &x)
{
    BigFloat out(kRad);
    mpfr_set_ui_2exp(out.get(), 1u, mpfr_get_exp(x.get()) - x.precision() - 1, MPFR_RNDU);
    return out;
}

// |x| rounded up into a radius-sized float.
BigFloat abs_up(mpfr_srcptr x)
{
    BigFloat out(kRad);
    mpfr_abs(out.get(), x, MPFR_RNDU);
    return out;
}

// |x| rounded down into a radius-sized float.
BigFloat abs_down(mpfr_srcptr x)
{
    BigFloat out(kRad);
    mpfr_abs(out.get(), x, MPFR_RNDD);
    return out;
}

// mid + direction * rad, computed exactly.
BigFloat exact_endpoint(const BigFloat &mid, const BigFloat &rad, int direction)
{
    if (rad.is_zero()) {
        return mid;
    }
    if (mid.is_zero()) {
        BigFloat out(rad);
        if (direction < 0) {
            mpfr_neg(out.get(), out.get(), MPFR_RNDN);
        }
        return out;
    }
    const auto em = mpfr_get_exp(mid.get());
    const auto er = mpfr_get_exp(rad.get());
    const auto top = std::max(em, er);
    const auto bottom = std::min(em - mid.precision(), er - rad.precision());
    BigFloat out(static_cast<Bits>(top - bottom + 2));
    const int t = direction < 0 ? mpfr_sub(out.get(), mid.get(), rad.get(), MPFR_RNDN)
                                : mpfr_add(out.get(), mid.get(), rad.get(), MPFR_RNDN);
    if (t != 0) {
        throw std::logic_error("ball endpoint computation was not exact");
    }
    return out;
}

} // namespace

Real::Real() : m_mid(64), m_rad(kRad) {}

Real::Real(long value, Bits precision) : m_mid(precision), m_rad(kRad)
{
    account_rounding(mpfr_set_si(m_mid.get(), value, MPFR_RNDN));
}

void Real::account_rounding(int ternary)
{
    if (ternary != 0 && !m_mid.is_zero()) {
        mpfr_add(m_rad.get(), m_rad.get(), half_ulp(m_mid).get(), MPFR_RNDU);
    }
}

Real Real::from_integer(const Integer &value, Bits precision)
{
    Real out{BigFloat(precision), BigFloat(kRad)};
    out.account_rounding(mpfr_set_z(out.m_mid.get(), value.get_mpz_t(), MPFR_RNDN));
    return out;
}

Real Real::from_rational(const Rational &value, Bits precision)
{
    Real out{BigFloat(precision), BigFloat(kRad)};
    out.account_rounding(mpfr_set_q(out.m_mid.get(), value.value().get_mpq_t(), MPFR_RNDN));
    return out;
}

Real Real::from_decimal(std::string_view text, Bits precision)
{
    const std::string s(text);
    Real out{BigFloat(precision), BigFloat(kRad)};
    char *end = nullptr;
    const int t = mpfr_strtofr(out.m_mid.get(), s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end == nullptr || *end != '\0' || !mpfr_number_p(out.m_mid.get())) {
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
    out.account_rounding(t);
    return out;
}

Real Real::from_bounds(const BigFloat &lo, const BigFloat &hi, Bits precision)
{
    if (mpfr_cmp(lo.get(), hi.get()) > 0) {
        throw std::invalid_argument("from_bounds: lower endpoint exceeds upper endpoint");
    }
    BigFloat mid(precision);
    BigFloat sum(std::max(lo.precision(), hi.precision()) + 1);
    mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), sum.get(), 1, MPFR_RNDN);
    BigFloat left(kRad), right(kRad);
    mpfr_sub(left.get(), mid.get(), lo.get(), MPFR_RNDU);
    mpfr_sub(right.get(), hi.get(), mid.get(), MPFR_RNDU);
    BigFloat rad(kRad);
    mpfr_max(rad.get(), left.get(), right.get(), MPFR_RNDU);
    if (rad.sign() < 0) {
        mpfr_set_zero(rad.get(), 1);
    }
    return Real(std::move(mid), std::move(rad));
}

Real Real::from_mid_rad(const BigFloat &mid, const BigFloat &rad)
{
    return Real(mid, abs_up(rad.get()));
}

BigFloat Real::lower() const
{
    return exact_endpoint(m_mid, m_rad, -1);
}

BigFloat Real::upper() const
{
    return exact_endpoint(m_mid, m_rad, +1);
}

bool Real::contains_zero() const
{
    return mpfr_cmpabs(m_mid.get(), m_rad.get()) <= 0;
}

bool Real::is_positive() const
{
    return m_mid.sign() > 0 && mpfr_cmpabs(m_mid.get(), m_rad.get()) > 0;
}

bool Real::is_negative() const
{
    return m_mid.sign() < 0 && mpfr_cmpabs(m_mid.get(), m_rad.get()) > 0;
}

bool Real::contains(const Real &other) const
{
    return mpfr_cmp(lower().get(), other.lower().get()) <= 0 && mpfr_cmp(other.upper().get(), upper().get()) <= 0;
}

bool Real::contains(const Rational &value) const
{
    const auto *q = value.value().get_mpq_t();
    return mpfr_cmp_q(lower().get(), q) <= 0 && mpfr_cmp_q(upper().get(), q) >= 0;
}

bool Real::overlaps(const Real &other) const
{
    return mpfr_cmp(lower().get(), other.upper().get()) <= 0 && mpfr_cmp(other.lower().get(), upper().get()) <= 0;
}

Real Real::with_precision(Bits precision) const
{
    Real out(BigFloat(precision), m_rad);
    out.account_rounding(mpfr_set(out.m_mid.get(), m_mid.get(), MPFR_RNDN));
    return out;
}

Real Real::add_error(const BigFloat &error) const
{
    Real out(*this);
    mpfr_add(out.m_rad.get(), out.m_rad.get(), abs_up(error.get()).get(), MPFR_RNDU);
    return out;
}

double Real::rad_double() const
{
    return mpfr_get_d(m_rad.get(), MPFR_RNDU);
}

std::string Real::mid_string(int digits) const
{
    return m_mid.to_scientific(digits);
}

std::string Real::mid_string() const
{
    return mid_string(static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1);
}

std::string Real::rad_string() const
{
    char *buffer = nullptr;
    if (mpfr_asprintf(&buffer, "%.5RUe", m_rad.get()) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

Real Real::operator-() const
{
    Real out(*this);
    mpfr_neg(out.m_mid.get(), out.m_mid.get(), MPFR_RNDN);
    return out;
}

Real &Real::operator+=(const Real &rhs)
{
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int t = mpfr_add(mid.get(), m_mid.get(), rhs.m_mid.get(), MPFR_RNDN);
    mpfr_add(m_rad.get(), m_rad.get(), rhs.m_rad.get(), MPFR_RNDU);
    m_mid = std::move(mid);
    account_rounding(t);
    return *this;
}

Real &Real::operator-=(const Real &rhs)
{
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int t = mpfr_sub(mid.get(), m_mid.get(), rhs.m_mid.get(), MPFR_RNDN);
    mpfr_add(m_rad.get(), m_rad.get(), rhs.m_rad.get(), MPFR_RNDU);
    m_mid = std::move(mid);
    account_rounding(t);
    return *this;
}

Real &Real::operator*=(const Real &rhs)
{
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int t = mpfr_mul(mid.get(), m_mid.get(), rhs.m_mid.get(), MPFR_RNDN);

    // |a| rb + |b| ra + ra rb
    BigFloat rad(kRad), term(kRad);
    mpfr_mul(rad.get(), abs_up(m_mid.get()).get(), rhs.m_rad.get(), MPFR_RNDU);
    mpfr_mul(term.get(), abs_up(rhs.m_mid.get()).get(), m_rad.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), m_rad.get(), rhs.m_rad.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);

    m_mid = std::move(mid);
    m_rad = std::move(rad);
    account_rounding(t);
    return *this;
}

Real &Real::operator/=(const Real &rhs)
{
    if (rhs.contains_zero()) {
        throw DomainError("division by an interval containing zero");
    }
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int t = mpfr_div(mid.get(), m_mid.get(), rhs.m_mid.get(), MPFR_RNDN);

    // (|a| rb + |b| ra) / (|b| (|b| - rb))
    BigFloat num(kRad), term(kRad);
    mpfr_mul(num.get(), abs_up(m_mid.get()).get(), rhs.m_rad.get(), MPFR_RNDU);
    mpfr_mul(term.get(), abs_up(rhs.m_mid.get()).get(), m_rad.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), term.get(), MPFR_RNDU);

    const BigFloat b_low = abs_down(rhs.m_mid.get());
    BigFloat den(kRad);
    mpfr_sub(den.get(), b_low.get(), rhs.m_rad.get(), MPFR_RNDD);
    if (den.sign() <= 0) {
        throw DomainError("division by an interval too close to zero");
    }
    mpfr_mul(den.get(), den.get(), b_low.get(), MPFR_RNDD);
    BigFloat rad(kRad);
    mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);

    m_mid = std::move(mid);
    m_rad = std::move(rad);
    account_rounding(t);
    return *this;
}

Real operator*(const Real &lhs, long rhs)
{
    Real out(BigFloat(lhs.precision()), BigFloat(kRad));
    const int t = mpfr_mul_si(out.m_mid.get(), lhs.m_mid.get(), rhs, MPFR_RNDN);
    mpfr_mul_ui(out.m_rad.get(), lhs.m_rad.get(), static_cast<unsigned long>(rhs < 0 ? -rhs : rhs), MPFR_RNDU);
    out.account_rounding(t);
    return out;
}

Real operator/(const Real &lhs, long rhs)
{
    if (rhs == 0) {
        throw DomainError("division by zero");
    }
    Real out(BigFloat(lhs.precision()), BigFloat(kRad));
    const int t = mpfr_div_si(out.m_mid.get(), lhs.m_mid.get(), rhs, MPFR_RNDN);
    mpfr_div_ui(out.m_rad.get(), lhs.m_rad.get(), static_cast<unsigned long>(rhs < 0 ? -rhs : rhs), MPFR_RNDU);
    out.account_rounding(t);
    return out;
}

Real operator+(const Real &lhs, long rhs)
{
    Real out(BigFloat(lhs.precision()), lhs.m_rad);
    out.account_rounding(mpfr_add_si(out.m_mid.get(), lhs.m_mid.get(), rhs, MPFR_RNDN));
    return out;
}

std::ostream &operator<<(std::ostream &os, const Real &x)
{
    return os << x.mid_string() << " +/- " << x.rad_string();
}

Real abs(const Real &x)
{
    if (!x.contains_zero()) {
        return x.mid().sign() < 0 ? -x : x;
    }
    const BigFloat lo = x.lower();
    const BigFloat hi = x.upper();
    const BigFloat &far = mpfr_cmpabs(lo.get(), hi.get()) > 0 ? lo : hi;
    BigFloat top(far.precision());
    mpfr_abs(top.get(), far.get(), MPFR_RNDN);
    return Real::from_bounds(BigFloat(x.precision()), top, x.precision());
}

Real sqr(const Real &x)
{
    return x * x;
}

Real pow(const Real &x, unsigned long exponent)
{
    Real result(1, x.precision());
    Real base = x;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent != 0) {
            base = sqr(base);
        }
    }
    return result;
}

Real inverse(const Real &x)
{
    return Real(1, x.precision()) / x;
}

Real ldexp(const Real &x, long exponent)
{
    BigFloat mid(x.mid());
    BigFloat rad(x.rad());
    mpfr_mul_2si(mid.get(), mid.get(), exponent, MPFR_RNDN);
    mpfr_mul_2si(rad.get(), rad.get(), exponent, MPFR_RNDU);
    return Real::from_mid_rad(mid, rad);
}

Real hull(const Real &a, const Real &b)
{
    const BigFloat al = a.lower(), bl = b.lower(), au = a.upper(), bu = b.upper();
    const BigFloat &lo = mpfr_cmp(al.get(), bl.get()) <= 0 ? al : bl;
    const BigFloat &hi = mpfr_cmp(au.get(), bu.get()) >= 0 ? au : bu;
    return Real::from_bounds(lo, hi, std::max(a.precision(), b.precision()));
}

BigFloat interval_gap(const Real &a, const Real &b)
{
    BigFloat out(kRad);
    if (a.overlaps(b)) {
        return out;
    }
    const BigFloat au = a.upper(), bl = b.lower();
    if (mpfr_cmp(au.get(), bl.get()) < 0) {
        mpfr_sub(out.get(), bl.get(), au.get(), MPFR_RNDD);
    } else {
        mpfr_sub(out.get(), a.lower().get(), b.upper().get(), MPFR_RNDD);
    }
    return out;
}

bool contains_integer(const Real &x)
{
    const BigFloat lo = x.lower();
    const BigFloat hi = x.upper();
    BigFloat floor_lo(lo.precision() + 2);
    mpfr_floor(floor_lo.get(), lo.get());
    if (mpfr_equal_p(floor_lo.get(), lo.get())) {
        return true;
    }
    mpfr_add_ui(floor_lo.get(), floor_lo.get(), 1u, MPFR_RNDN);
    return mpfr_cmp(floor_lo.get(), hi.get()) <= 0;
}

bool radius_at_most(const Real &x, const Real &limit)
{
    return mpfr_cmp(x.rad().get(), limit.lower().get()) <= 0;
}

} // namespace cosprod
