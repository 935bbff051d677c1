#include <cosprod/numbers/zeta.hpp>

#include <cmath>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>

namespace cosprod
{

namespace
{

constexpr Bits kGuard = 32;

// (s)_k = s (s+1) ... (s+k-1).
Integer rising_factorial(unsigned long s, unsigned long k)
{
    Integer out = 1;
    for (unsigned long i = 0; i < k; ++i) {
        out *= s + i;
    }
    return out;
}

bool below(const Real &x, const BigFloat &limit)
{
    return mpfr_cmp(abs(x).upper().get(), limit.get()) < 0;
}

} // namespace

Real zeta_even(unsigned long n, const Real &pi_value)
{
    if (n == 0) {
        throw DomainError("zeta_even requires n >= 1");
    }
    const Rational coefficient = abs(bernoulli(2 * n)) / Rational(Integer(2 * factorial(2 * n)));
    return pow(ldexp(pi_value, 1), 2 * n) * coefficient;
}

Real zeta_even(unsigned long n, const PrecisionPolicy &policy)
{
    return zeta_even(n, pi(policy.working_bits() + kGuard)).with_precision(policy.working_bits());
}

Real lambda_odd_denominator(unsigned long n, const Real &pi_value)
{
    Integer four_power;
    mpz_ui_pow_ui(four_power.get_mpz_t(), 4, n);
    const Rational factor(Integer(four_power - 1), four_power);
    return zeta_even(n, pi_value) * factor;
}

Real lambda_odd_denominator(unsigned long n, const PrecisionPolicy &policy)
{
    return lambda_odd_denominator(n, pi(policy.working_bits() + kGuard)).with_precision(policy.working_bits());
}

Real hurwitz_zeta(unsigned long s, const Rational &a, const PrecisionPolicy &policy)
{
    if (s < 2) {
        throw DomainError("hurwitz_zeta requires s >= 2");
    }
    if (a.sign() <= 0 || a > Rational(1)) {
        throw DomainError("hurwitz_zeta requires 0 < a <= 1");
    }
    const Bits bits = policy.working_bits();
    const Bits work = bits + kGuard;
    BigFloat limit(64);
    mpfr_set_ui_2exp(limit.get(), 1u, 8 - bits, MPFR_RNDN);

    // Correction terms shrink like (2 pi (M + a))^(-2j) until 2j ~ 2 pi (M + a).
    auto cut = static_cast<unsigned long>(std::ceil(static_cast<double>(bits) * std::log(2.0) / (2.0 * M_PI))) + 8;

    for (;;) {
        const Real x = Real::from_rational(Rational(static_cast<long>(cut)) + a, work);
        const Real inv = inverse(x);
        const Real inv_s = pow(inv, s);

        Real tail = inv_s * x / static_cast<long>(s - 1);
        tail += ldexp(inv_s, -1);

        const unsigned long max_j = static_cast<unsigned long>(M_PI * static_cast<double>(cut));
        Real power = inv_s * x; // (M + a)^(1 - s), raised by inv^2 per step
        bool converged = false;
        for (unsigned long j = 1; j <= max_j; ++j) {
            power *= sqr(inv);
            const Rational coefficient =
                bernoulli(2 * j) * Rational(rising_factorial(s, 2 * j - 1)) / Rational(factorial(2 * j));
            const Real term = power * coefficient;
            if (below(term, limit)) {
                tail = tail.add_error(ldexp(abs(term), 1).upper());
                converged = true;
                break;
            }
            tail += term;
        }
        if (!converged) {
            cut *= 2;
            continue;
        }

        Real sum(0, work);
        for (unsigned long n = 0; n < cut; ++n) {
            sum += pow(inverse(Real::from_rational(Rational(static_cast<long>(n)) + a, work)), s);
        }
        return (sum + tail).with_precision(bits);
    }
}

} // namespace cosprod
