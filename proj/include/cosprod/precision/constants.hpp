#ifndef COSPROD_PRECISION_CONSTANTS_HPP
#define COSPROD_PRECISION_CONSTANTS_HPP

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

/// pi from Machin's formula 16 atan(1/5) - 4 atan(1/239).
///
/// The radius is at most 2^(1 - bits) * pi. Nothing in this library's series
/// or continued fractions feeds into it, so it can serve as an external
/// reference for them.
Real pi(Bits bits);

inline Real const_pi(const PrecisionPolicy &policy)
{
    return pi(policy.working_bits());
}

} // namespace cosprod

#endif
