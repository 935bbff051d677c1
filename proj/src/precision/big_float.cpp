#include <cosprod/precision/big_float.hpp>

#include <stdexcept>

namespace cosprod
{

BigFloat::BigFloat(Bits precision)
{
    mpfr_init2(m_value, precision);
    mpfr_set_zero(m_value, 1);
}

BigFloat::BigFloat(Bits precision, long value)
{
    mpfr_init2(m_value, precision);
    mpfr_set_si(m_value, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(m_value, other.precision());
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    mpfr_init2(m_value, MPFR_PREC_MIN);
    mpfr_swap(m_value, other.m_value);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(m_value, other.precision());
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(m_value, other.m_value);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(m_value);
}

std::string BigFloat::to_scientific(int digits) const
{
    if (digits < 1) {
        digits = 1;
    }
    char *buffer = nullptr;
    if (mpfr_asprintf(&buffer, "%.*Re", digits - 1, m_value) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

} // namespace cosprod
