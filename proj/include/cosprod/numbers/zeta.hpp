#ifndef COSPROD_NUMBERS_ZETA_HPP
#define COSPROD_NUMBERS_ZETA_HPP

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

/// zeta(2n) = |B_2n| (2 pi)^(2n) / (2 (2n)!), for n >= 1.
Real zeta_even(unsigned long n, const PrecisionPolicy &policy);

/// Same, from a caller-supplied enclosure of pi; the result has pi_value's precision.
Real zeta_even(unsigned long n, const Real &pi_value);

/// lambda(2n) = sum_{k>=0} (2k+1)^(-2n) = (1 - 4^(-n)) zeta(2n), for n >= 1.
Real lambda_odd_denominator(unsigned long n, const PrecisionPolicy &policy);
Real lambda_odd_denominator(unsigned long n, const Real &pi_value);

/// Hurwitz zeta sum_{n>=0} (n + a)^(-s) for integer s >= 2 and rational 0 < a <= 1.
///
/// Direct summation to a cut M followed by an Euler-Maclaurin tail. M and the
/// number of correction terms are picked so the remainder, bounded by twice
/// the first omitted correction, stays below 2^(8 - working_bits).
/// Throws DomainError outside the stated parameter range.
Real hurwitz_zeta(unsigned long s, const Rational &a, const PrecisionPolicy &policy);

} // namespace cosprod

#endif
