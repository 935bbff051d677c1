#ifndef COSPROD_PRECISION_BIG_FLOAT_HPP
#define COSPROD_PRECISION_BIG_FLOAT_HPP

#include <string>

#include <mpfr.h>

namespace cosprod
{

using Bits = mpfr_prec_t;

/// Owning handle around an mpfr_t.
///
/// Every instance carries its own precision; nothing here touches MPFR's
/// global default precision, so values can be created concurrently.
class BigFloat
{
public:
    explicit BigFloat(Bits precision);
    BigFloat(Bits precision, long value);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept
    {
        return m_value;
    }
    mpfr_srcptr get() const noexcept
    {
        return m_value;
    }

    Bits precision() const noexcept
    {
        return mpfr_get_prec(m_value);
    }

    bool is_zero() const noexcept
    {
        return mpfr_zero_p(m_value) != 0;
    }
    int sign() const noexcept
    {
        return mpfr_sgn(m_value);
    }
    double to_double() const noexcept
    {
        return mpfr_get_d(m_value, MPFR_RNDN);
    }

    /// Scientific notation with `digits` significant digits, round-to-nearest.
    std::string to_scientific(int digits) const;

private:
    mpfr_t m_value;
};

} // namespace cosprod

#endif
