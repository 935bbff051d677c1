#include <doctest.h>

#include <random>
#include <stdexcept>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/errors.hpp>
#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

using namespace cosprod;

namespace
{

BigFloat mpfr_reference_pi(Bits bits)
{
    BigFloat out(bits);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

Real from_mpfr(const BigFloat &x)
{
    return Real::from_mid_rad(x, BigFloat(64));
}

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_SUITE("precision")
{
    TEST_CASE("rational parsing and canonical form")
    {
        CHECK(Rational::parse("6/4").to_string() == "3/2");
        CHECK(Rational::parse("-7").to_string() == "-7");
        CHECK(Rational(3, -6).to_string() == "-1/2");
        CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
        CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    }

    TEST_CASE("rational field axioms on random pairs")
    {
        std::mt19937_64 rng(20240611);
        for (int i = 0; i < 1000; ++i) {
            const Rational a = random_rational(rng);
            const Rational b = random_rational(rng);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
            }
            CHECK(a.denominator() > 0);
        }
    }

    TEST_CASE("factorial and binomial")
    {
        CHECK(factorial(10) == Integer(3628800));
        CHECK(binomial(10, 3) == Integer(120));
    }

    TEST_CASE("real arithmetic encloses the exact rational result")
    {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 1000; ++i) {
            const Rational a = random_rational(rng);
            const Rational b = random_rational(rng);
            const Real x = Real::from_rational(a, 80);
            const Real y = Real::from_rational(b, 80);
            CHECK(x.contains(a));
            CHECK((x + y).contains(a + b));
            CHECK((x - y).contains(a - b));
            CHECK((x * y).contains(a * b));
            if (!b.is_zero()) {
                CHECK((x / y).contains(a / b));
            }
            CHECK(sqr(x).contains(a * a));
        }
    }

    TEST_CASE("division by a ball containing zero throws")
    {
        const Real tiny = Real::from_mid_rad(BigFloat(64, 0), BigFloat(64, 1));
        CHECK_THROWS_AS(Real(1) / tiny, DomainError);
    }

    TEST_CASE("pi encloses the MPFR constant at several precisions")
    {
        for (Bits bits : {64, 128, 256, 1024, 4096}) {
            const Real value = pi(bits);
            const BigFloat ref = mpfr_reference_pi(bits + 64);
            CHECK(value.contains(from_mpfr(ref)));
            BigFloat bound(64);
            mpfr_set_ui_2exp(bound.get(), 1u, 3 - bits, MPFR_RNDN);
            CHECK(mpfr_cmp(value.rad().get(), bound.get()) <= 0);
        }
    }

    TEST_CASE("refining precision nests pi enclosures")
    {
        const Real coarse = pi(64);
        const Real fine = pi(512);
        CHECK(coarse.overlaps(fine));
        CHECK(mpfr_cmp(fine.rad().get(), coarse.rad().get()) < 0);
    }

    TEST_CASE("elementary functions enclose MPFR values at widened inputs")
    {
        const Bits bits = 200;
        const Real x = Real::from_rational(Rational(1, 3), bits);
        const Real wide = x.add_error(BigFloat(64, 0)).add_error([] {
            BigFloat e(64);
            mpfr_set_ui_2exp(e.get(), 1u, -100, MPFR_RNDN);
            return e;
        }());
        for (auto f : {Elementary::tan, Elementary::tanh, Elementary::cos, Elementary::cosh, Elementary::log,
                       Elementary::sqrt, Elementary::exp}) {
            const Real narrow = eval_elementary(f, x, PrecisionPolicy(bits, "1e-30"));
            const Real broad = eval_elementary(f, wide, PrecisionPolicy(bits, "1e-30"));
            CHECK(broad.overlaps(narrow));
            CHECK(mpfr_cmp(broad.lower().get(), narrow.lower().get()) <= 0);
            CHECK(mpfr_cmp(broad.upper().get(), narrow.upper().get()) >= 0);
        }
    }

    TEST_CASE("elementary identities hold within the radius")
    {
        const Bits bits = 256;
        const Real x = Real::from_rational(Rational(3, 7), bits);
        const Real one(1, bits);
        CHECK((sqr(cosh(x)) - sqr(tanh(x) * cosh(x))).contains(Rational(1)));
        CHECK((log(exp(x))).contains(Rational(3, 7)));
        CHECK(sqr(sqrt(x)).contains(Rational(3, 7)));
        CHECK((sqr(tan(x)) + one).contains(Rational(1)) == false);
        CHECK(((sqr(tan(x)) + one) * sqr(cos(x))).contains(Rational(1)));
    }

    TEST_CASE("tan rejects intervals straddling a pole")
    {
        const Real half_pi = ldexp(pi(128), -1);
        CHECK_THROWS_AS(tan(half_pi), PoleStraddleError);
        CHECK_THROWS_AS(tan(half_pi * 3), PoleStraddleError);
        CHECK_NOTHROW(tan(Real(1, 128)));
    }

    TEST_CASE("log and sqrt domain errors")
    {
        CHECK_THROWS_AS(log(Real(0, 64)), DomainError);
        CHECK_THROWS_AS(sqrt(Real(-1, 64)), DomainError);
        CHECK(sqrt(Real(0, 64)).contains(Rational(0)));
    }

    TEST_CASE("precision policy invariants")
    {
        CHECK_THROWS_AS(PrecisionPolicy(32, "1e-10"), std::invalid_argument);
        CHECK_THROWS_AS(PrecisionPolicy(128, "0"), std::invalid_argument);
        CHECK_THROWS_AS(PrecisionPolicy(128, "-1"), std::invalid_argument);
        const PrecisionPolicy p;
        CHECK(p.working_bits() == 256);
        CHECK(p.tolerance_log2() == doctest::Approx(-99.66).epsilon(0.001));
    }

    TEST_CASE("interval gap and hull")
    {
        const Real a(1, 64);
        const Real b(3, 64);
        CHECK(interval_gap(a, b).to_double() == 2.0);
        CHECK(interval_gap(a, hull(a, b)).is_zero());
        CHECK(contains_integer(Real::from_rational(Rational(5, 2), 64)) == false);
        CHECK(contains_integer(Real(2, 64)));
    }
}
