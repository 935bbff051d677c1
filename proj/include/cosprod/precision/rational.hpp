#ifndef COSPROD_PRECISION_RATIONAL_HPP
#define COSPROD_PRECISION_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cosprod
{

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : m_value(value) {}
    Rational(const Integer &value) : m_value(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer &numerator, const Integer &denominator);
    Rational(long numerator, long denominator) : Rational(Integer(numerator), Integer(denominator)) {}
    explicit Rational(const mpq_class &value);

    /// Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view text);

    Integer numerator() const
    {
        return m_value.get_num();
    }
    Integer denominator() const
    {
        return m_value.get_den();
    }
    const mpq_class &value() const noexcept
    {
        return m_value;
    }
    int sign() const
    {
        return sgn(m_value);
    }
    bool is_zero() const
    {
        return sign() == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational operator-() const
    {
        return Rational(mpq_class(-m_value));
    }
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    /// Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs)
    {
        return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, const Rational &rhs)
    {
        return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, const Rational &rhs)
    {
        return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, const Rational &rhs)
    {
        return lhs /= rhs;
    }

    friend bool operator==(const Rational &lhs, const Rational &rhs)
    {
        return lhs.m_value == rhs.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
    {
        const int c = cmp(lhs.m_value, rhs.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q)
    {
        return os << q.to_string();
    }

private:
    mpq_class m_value;
};

Rational abs(const Rational &q);
Rational pow(const Rational &base, unsigned long exponent);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

} // namespace cosprod

#endif
