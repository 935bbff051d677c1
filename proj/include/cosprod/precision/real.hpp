#ifndef COSPROD_PRECISION_REAL_HPP
#define COSPROD_PRECISION_REAL_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <cosprod/precision/big_float.hpp>
#include <cosprod/precision/rational.hpp>

namespace cosprod
{

/// Arbitrary-precision real number with a rigorous error radius (ball arithmetic).
///
/// The represented exact quantity lies in [mid - rad, mid + rad]. The midpoint
/// carries the working precision; the radius is a 64-bit float that is only
/// ever rounded upwards. Every arithmetic operation returns a ball containing
/// the exact image of its input balls.
class Real
{
public:
    static constexpr Bits radius_bits = 64;

    /// Exact zero at 64 bits.
    Real();
    /// Exact small integer (rounded with a radius if `precision` is below 64 bits).
    Real(long value, Bits precision = 64);

    static Real from_integer(const Integer &value, Bits precision);
    static Real from_rational(const Rational &value, Bits precision);
    /// Parses a decimal literal such as "1e-30" or "-2.5"; throws std::invalid_argument.
    static Real from_decimal(std::string_view text, Bits precision);
    /// Smallest ball (at `precision`) enclosing [lo, hi]; requires lo <= hi.
    static Real from_bounds(const BigFloat &lo, const BigFloat &hi, Bits precision);
    /// Ball with the given midpoint and a non-negative radius.
    static Real from_mid_rad(const BigFloat &mid, const BigFloat &rad);

    Bits precision() const noexcept
    {
        return m_mid.precision();
    }
    const BigFloat &mid() const noexcept
    {
        return m_mid;
    }
    const BigFloat &rad() const noexcept
    {
        return m_rad;
    }

    /// Exact endpoints mid -/+ rad (computed at whatever precision makes them exact).
    BigFloat lower() const;
    BigFloat upper() const;

    bool is_exact() const
    {
        return m_rad.is_zero();
    }
    bool contains_zero() const;
    bool excludes_zero() const
    {
        return !contains_zero();
    }
    bool is_positive() const;
    bool is_negative() const;

    bool contains(const Real &other) const;
    bool contains(const Rational &value) const;
    bool overlaps(const Real &other) const;

    /// Re-rounds the midpoint to `precision`, widening the radius as needed.
    Real with_precision(Bits precision) const;
    /// Widens the radius by `error` (absolute value taken, rounded up).
    Real add_error(const BigFloat &error) const;

    double mid_double() const
    {
        return m_mid.to_double();
    }
    double rad_double() const;

    /// Midpoint in scientific notation with `digits` significant digits.
    std::string mid_string(int digits) const;
    /// Midpoint with as many digits as the precision supports.
    std::string mid_string() const;
    /// Radius with 6 significant digits, rounded up.
    std::string rad_string() const;

    Real operator-() const;

    Real &operator+=(const Real &rhs);
    Real &operator-=(const Real &rhs);
    Real &operator*=(const Real &rhs);
    /// Throws DomainError if the divisor contains zero.
    Real &operator/=(const Real &rhs);

    friend Real operator+(Real lhs, const Real &rhs)
    {
        return lhs += rhs;
    }
    friend Real operator-(Real lhs, const Real &rhs)
    {
        return lhs -= rhs;
    }
    friend Real operator*(Real lhs, const Real &rhs)
    {
        return lhs *= rhs;
    }
    friend Real operator/(Real lhs, const Real &rhs)
    {
        return lhs /= rhs;
    }

    friend Real operator*(const Real &lhs, long rhs);
    friend Real operator*(long lhs, const Real &rhs)
    {
        return rhs * lhs;
    }
    friend Real operator/(const Real &lhs, long rhs);
    friend Real operator+(const Real &lhs, long rhs);
    friend Real operator+(long lhs, const Real &rhs)
    {
        return rhs + lhs;
    }
    friend Real operator-(const Real &lhs, long rhs)
    {
        return lhs + (-rhs);
    }
    friend Real operator-(long lhs, const Real &rhs)
    {
        return (-rhs) + lhs;
    }

    friend Real operator*(const Real &lhs, const Rational &rhs)
    {
        return lhs * from_rational(rhs, lhs.precision());
    }
    friend Real operator*(const Rational &lhs, const Real &rhs)
    {
        return rhs * lhs;
    }
    friend Real operator+(const Real &lhs, const Rational &rhs)
    {
        return lhs + from_rational(rhs, lhs.precision());
    }

    friend std::ostream &operator<<(std::ostream &os, const Real &x);

private:
    Real(BigFloat mid, BigFloat rad) : m_mid(std::move(mid)), m_rad(std::move(rad)) {}

    // Widens the radius by half an ulp of the midpoint when `ternary` reports an inexact result.
    void account_rounding(int ternary);

    BigFloat m_mid;
    BigFloat m_rad;
};

Real abs(const Real &x);
Real sqr(const Real &x);
Real pow(const Real &x, unsigned long exponent);
Real inverse(const Real &x);
/// Exact multiplication by 2^exponent.
Real ldexp(const Real &x, long exponent);
/// Smallest ball containing both inputs.
Real hull(const Real &a, const Real &b);
/// Distance between the two intervals (zero when they overlap), rounded down.
BigFloat interval_gap(const Real &a, const Real &b);
/// True when [lower(x), upper(x)] contains an integer.
bool contains_integer(const Real &x);
/// True when rad(x) does not exceed the lower endpoint of `limit`.
bool radius_at_most(const Real &x, const Real &limit);

} // namespace cosprod

#endif
