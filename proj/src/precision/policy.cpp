#include <cosprod/precision/policy.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cosprod
{

PrecisionPolicy::PrecisionPolicy() : PrecisionPolicy(default_bits, "1e-30") {}

PrecisionPolicy::PrecisionPolicy(Bits working_bits, const Real &target_tolerance)
    : m_bits(working_bits), m_tolerance(target_tolerance)
{
    if (m_bits < min_bits) {
        throw std::invalid_argument("working precision must be at least 64 bits, got " + std::to_string(m_bits));
    }
    if (!m_tolerance.is_positive()) {
        throw std::invalid_argument("target tolerance must be positive");
    }
}

PrecisionPolicy::PrecisionPolicy(Bits working_bits, std::string_view target_tolerance)
    : PrecisionPolicy(working_bits, Real::from_decimal(target_tolerance, 128))
{
}

double PrecisionPolicy::tolerance_log2() const
{
    long exponent = 0;
    const double mantissa = mpfr_get_d_2exp(&exponent, m_tolerance.mid().get(), MPFR_RNDN);
    return static_cast<double>(exponent) + std::log2(mantissa);
}

PrecisionPolicy PrecisionPolicy::with_bits(Bits bits) const
{
    return PrecisionPolicy(bits, m_tolerance);
}

PrecisionPolicy PrecisionPolicy::with_tolerance(std::string_view tolerance) const
{
    return PrecisionPolicy(m_bits, tolerance);
}

} // namespace cosprod
