#ifndef COSPROD_PRECISION_POLICY_HPP
#define COSPROD_PRECISION_POLICY_HPP

#include <string_view>

#include <cosprod/precision/real.hpp>

namespace cosprod
{

/// Working precision plus the absolute accuracy a computation should aim for.
///
/// Invariants: working_bits >= 64 and target_tolerance > 0.
class PrecisionPolicy
{
public:
    static constexpr Bits default_bits = 256;
    static constexpr Bits min_bits = 64;
    static constexpr Bits max_escalation_bits = 4096;

    /// 256 bits, tolerance 1e-30.
    PrecisionPolicy();
    /// Throws std::invalid_argument when an invariant is violated.
    PrecisionPolicy(Bits working_bits, const Real &target_tolerance);
    PrecisionPolicy(Bits working_bits, std::string_view target_tolerance);

    Bits working_bits() const noexcept
    {
        return m_bits;
    }
    const Real &target_tolerance() const noexcept
    {
        return m_tolerance;
    }
    /// log2 of the tolerance midpoint, used for planning term counts.
    double tolerance_log2() const;

    PrecisionPolicy with_bits(Bits bits) const;
    PrecisionPolicy with_tolerance(std::string_view tolerance) const;

private:
    Bits m_bits;
    Real m_tolerance;
};

} // namespace cosprod

#endif
