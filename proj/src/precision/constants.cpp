#include <cosprod/precision/constants.hpp>

namespace cosprod
{

namespace
{

// atan(1/q) = sum_k (-1)^k / ((2k+1) q^(2k+1)). The series alternates with
// decreasing terms, so the first omitted term bounds the remainder.
Real arctan_of_reciprocal(unsigned long q, Bits bits)
{
    const long q2 = static_cast<long>(q * q);
    Real power = inverse(Real(static_cast<long>(q), bits));
    Real sum(0, bits);
    BigFloat threshold(64);
    mpfr_set_ui_2exp(threshold.get(), 1u, -bits - 8, MPFR_RNDN);

    for (long k = 0;; ++k) {
        const Real term = power / (2 * k + 1);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        power = power / q2;
        if (mpfr_cmp(power.upper().get(), threshold.get()) < 0) {
            return sum.add_error(power.upper());
        }
    }
}

} // namespace

Real pi(Bits bits)
{
    const Bits work = bits + 32;
    const Real value = arctan_of_reciprocal(5, work) * 16 - arctan_of_reciprocal(239, work) * 4;
    return value.with_precision(bits);
}

} // namespace cosprod
