#include <doctest.h>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>

using namespace cosprod;

namespace
{

const PrecisionPolicy kPolicy(256, "1e-30");

// sum_{k=1}^{K} k^(-2n) plus the integral-test tail interval [int_{K+1}^inf, int_K^inf].
Real brute_zeta(unsigned long n, unsigned long terms, Bits bits)
{
    Real sum(0, bits);
    for (unsigned long k = terms; k >= 1; --k) {
        sum += inverse(pow(Real(static_cast<long>(k), bits), 2 * n));
    }
    const long e = static_cast<long>(2 * n - 1);
    const Real lo = inverse(pow(Real(static_cast<long>(terms + 1), bits), 2 * n - 1) * e);
    const Real hi = inverse(pow(Real(static_cast<long>(terms), bits), 2 * n - 1) * e);
    return hull(sum + lo, sum + hi);
}

// sum_{n<N} (n+a)^(-s) plus [int_N^inf, int_{N-1}^inf] (t+a)^(-s) dt.
Real brute_hurwitz(unsigned long s, const Rational &a, unsigned long terms, Bits bits)
{
    Real sum(0, bits);
    for (unsigned long n = 0; n < terms; ++n) {
        sum += pow(inverse(Real::from_rational(Rational(static_cast<long>(n)) + a, bits)), s);
    }
    const long e = static_cast<long>(s - 1);
    const Real lo = pow(inverse(Real::from_rational(Rational(static_cast<long>(terms)) + a, bits)), s - 1) / e;
    const Real hi = pow(inverse(Real::from_rational(Rational(static_cast<long>(terms - 1)) + a, bits)), s - 1) / e;
    return hull(sum + lo, sum + hi);
}

} // namespace

TEST_SUITE("numbers")
{
    TEST_CASE("listed Bernoulli values")
    {
        CHECK(bernoulli(0) == Rational(1));
        CHECK(bernoulli(1) == Rational(-1, 2));
        CHECK(bernoulli(2) == Rational(1, 6));
        CHECK(bernoulli(4) == Rational(-1, 30));
        CHECK(bernoulli(6) == Rational(1, 42));
        CHECK(bernoulli(8) == Rational(-1, 30));
        CHECK(bernoulli(10) == Rational(5, 66));
        CHECK(bernoulli(12) == Rational(-691, 2730));
        CHECK(bernoulli(14) == Rational(7, 6));
        CHECK(bernoulli(16) == Rational(-3617, 510));
        CHECK(bernoulli(18) == Rational(43867, 798));
        CHECK(bernoulli(20) == Rational(-174611, 330));
        CHECK(bernoulli(7).is_zero());
    }

    TEST_CASE("listed Euler values")
    {
        CHECK(euler(0) == Rational(1));
        CHECK(euler(1) == Rational(-1, 2));
        CHECK(euler(3) == Rational(1, 4));
        CHECK(euler(5) == Rational(-1, 2));
        CHECK(euler(7) == Rational(17, 8));
        CHECK(euler(9) == Rational(-31, 2));
        CHECK(euler(11) == Rational(691, 4));
        CHECK(euler(13) == Rational(-5461, 2));
        CHECK(euler(15) == Rational(929569, 16));
        CHECK(euler(17) == Rational(-3202291, 2));
        CHECK(euler(19) == Rational(221930581, 4));
    }

    TEST_CASE("table invariants")
    {
        for (unsigned long k = 1; k <= 40; ++k) {
            CHECK(bernoulli(2 * k + 1).is_zero());
            CHECK(bernoulli(2 * k).sign() == (k % 2 == 1 ? 1 : -1));
            CHECK(euler(2 * k).is_zero());
        }
        for (unsigned long k = 0; k <= 20; ++k) {
            CHECK(euler(4 * k + 1).sign() == -1);
            CHECK(euler(4 * k + 3).sign() == 1);
        }
        CHECK(bernoulli_table().size() >= 82);
    }

    TEST_CASE("Euler numbers from Bernoulli numbers")
    {
        CHECK(euler_from_bernoulli(0) == Rational(1));
        CHECK(euler_from_bernoulli(1) == Rational(-1, 2));
        CHECK(euler_from_bernoulli(13) == Rational(-5461, 2));
        for (unsigned long n = 0; n <= 60; ++n) {
            CHECK(euler(n) == euler_from_bernoulli(n));
        }
        for (unsigned long n = 1; n <= 30; ++n) {
            Integer four;
            mpz_ui_pow_ui(four.get_mpz_t(), 4, n);
            CHECK(euler(2 * n - 1) == -Rational(Integer(four - 1), Integer(n)) * bernoulli(2 * n));
        }
    }

    TEST_CASE("even zeta values against closed forms")
    {
        const Real p = pi(300);
        CHECK(zeta_even(1, kPolicy).overlaps(sqr(p) / 6));
        CHECK(zeta_even(2, kPolicy).overlaps(pow(p, 4) / 90));
        CHECK(lambda_odd_denominator(1, kPolicy).overlaps(sqr(p) / 8));
        CHECK(lambda_odd_denominator(2, kPolicy).overlaps(pow(p, 4) / 96));
        CHECK(radius_at_most(zeta_even(5, kPolicy), Real::from_decimal("1e-70", 64)));
    }

    TEST_CASE("even zeta values against brute-force partial sums")
    {
        for (unsigned long n = 1; n <= 10; ++n) {
            CHECK(zeta_even(n, kPolicy).overlaps(brute_zeta(n, 2000, 256)));
        }
    }

    TEST_CASE("lambda consistency with odd-index Euler numbers")
    {
        for (unsigned long n = 1; n <= 8; ++n) {
            const Real p = pi(256);
            Real lhs = lambda_odd_denominator(n, kPolicy) * Rational(Integer(factorial(2 * n - 1) * 4)) / pow(p, 2 * n);
            if (n % 2 == 1) {
                lhs = -lhs;
            }
            CHECK(lhs.contains(euler(2 * n - 1)));
        }
    }

    TEST_CASE("Hurwitz zeta special values")
    {
        const Real p = pi(300);
        CHECK(hurwitz_zeta(2, Rational(1), kPolicy).overlaps(sqr(p) / 6));
        CHECK(hurwitz_zeta(2, Rational(1, 2), kPolicy).overlaps(sqr(p) / 2));
        const Real diff = hurwitz_zeta(3, Rational(1, 4), kPolicy) - hurwitz_zeta(3, Rational(3, 4), kPolicy);
        CHECK(diff.overlaps(pow(p, 3) * 2));
        CHECK(radius_at_most(diff, Real::from_decimal("1e-60", 64)));
    }

    TEST_CASE("Hurwitz zeta against brute-force sums on a grid")
    {
        for (unsigned long s : {2ul, 3ul, 5ul, 9ul}) {
            for (const Rational &a : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
                CHECK(hurwitz_zeta(s, a, kPolicy).overlaps(brute_hurwitz(s, a, 500, 256)));
            }
        }
    }

    TEST_CASE("Hurwitz zeta accuracy grows with precision")
    {
        const Real coarse = hurwitz_zeta(15, Rational(1, 4), PrecisionPolicy(128, "1e-20"));
        const Real fine = hurwitz_zeta(15, Rational(1, 4), PrecisionPolicy(512, "1e-60"));
        CHECK(coarse.overlaps(fine));
        CHECK(mpfr_cmp(fine.rad().get(), coarse.rad().get()) < 0);
    }
}
