#include <cosprod/precision/rational.hpp>

#include <stdexcept>

namespace cosprod
{

Rational::Rational(const Integer &numerator, const Integer &denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value = mpq_class(numerator, denominator);
    m_value.canonicalize();
}

Rational::Rational(const mpq_class &value) : m_value(value)
{
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s, 10));
        }
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_str();
}

Rational &Rational::operator+=(const Rational &rhs)
{
    m_value += rhs.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    m_value -= rhs.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    m_value *= rhs.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    m_value /= rhs.m_value;
    return *this;
}

Rational abs(const Rational &q)
{
    return q.sign() < 0 ? -q : q;
}

Rational pow(const Rational &base, unsigned long exponent)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace cosprod
