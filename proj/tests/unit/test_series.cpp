#include <doctest.h>

#include <vector>

#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/precision/errors.hpp>
#include <cosprod/series/series.hpp>
#include <cosprod/taylor/derivatives.hpp>

using namespace cosprod;

namespace
{

const PrecisionPolicy kPolicy(256, "1e-30");

Real rat(long p, long q)
{
    return Real::from_rational(Rational(p, q), 256);
}

Real quarter_pi()
{
    return ldexp(pi(256), -2);
}

bool radius_below(const Real &x, const char *limit)
{
    return radius_at_most(x, Real::from_decimal(limit, 64));
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("odd partial-fraction sum equals tan(x)/(8x)")
    {
        for (const Real &x : {rat(1, 10), rat(1, 3), quarter_pi(), Real(1, 256), pi(256)}) {
            const SeriesResult r = odd_partial_fraction_sum(x, kPolicy);
            const Real oracle = tan(x) / (x * 8);
            CHECK(r.value.overlaps(oracle));
            CHECK(radius_below(r.value, "1e-30"));
            CHECK(r.strategy == SeriesStrategy::zeta_accelerated);
        }
        CHECK(odd_partial_fraction_sum(Real(0, 256), kPolicy).value.contains(Rational(1, 8)));
        CHECK_THROWS_AS(odd_partial_fraction_sum(ldexp(pi(256), -1), kPolicy), PoleStraddleError);
    }

    TEST_CASE("odd partial-fraction sum special values")
    {
        const Real p = pi(256);
        const Real at_quarter = odd_partial_fraction_sum(quarter_pi(), kPolicy).value;
        CHECK(at_quarter.overlaps(inverse(p * 2)));
        // k >= 1 part at x = pi is 1/(3 pi^2); the k = 0 term is -1/(3 pi^2).
        const Real at_pi = odd_partial_fraction_sum(p, kPolicy).value;
        const Real k0 = inverse(sqr(p) * -3);
        CHECK((at_pi - k0).overlaps(inverse(sqr(p) * 3)));
    }

    TEST_CASE("plain partial sums miss the 1e-12 target")
    {
        // The omitted tail after K terms is about 1/(4 pi^2 K); 1e-12 would need K near 2.5e10.
        const Real x = rat(1, 3);
        const Real exact = odd_partial_fraction_sum(x, kPolicy).value;
        for (unsigned long terms : {1000ul, 10000ul, 100000ul}) {
            const Real partial = odd_partial_fraction_partial_sum(x, terms, kPolicy);
            const double gap = (exact - partial).mid_double();
            CHECK(gap > 1e-12);
            CHECK(gap * 4 * 9.8696 * static_cast<double>(terms) == doctest::Approx(1.0).epsilon(0.01));
        }
    }

    TEST_CASE("telescoping third")
    {
        CHECK(telescoping_third() == Rational(1, 3));
        CHECK(telescoping_partial_sum(1) == Rational(1, 5));
        CHECK(telescoping_partial_sum(2) == Rational(26, 105));
        Rational brute;
        for (long k = 1; k <= 1000; ++k) {
            brute += Rational(1, (2 * k - 1) * (2 * k + 3));
            CHECK(telescoping_partial_sum(static_cast<unsigned long>(k)) == brute);
        }
    }

    TEST_CASE("Leibniz tail")
    {
        const SeriesResult r = leibniz_tail_sum(kPolicy);
        const Real p = pi(256);
        CHECK(r.value.overlaps((p * 3 - 8) / 12));
        CHECK(radius_below(r.value, "1e-25"));
        CHECK((r.value + Rational(2, 3)).overlaps(ldexp(p, -2)));
    }

    TEST_CASE("power partial-fraction sums")
    {
        const Real p = pi(256);
        const SeriesResult at_zero = power_partial_fraction_sum(Real(0, 256), 1, kPolicy);
        CHECK(at_zero.value.overlaps((lambda_odd_denominator(2, kPolicy) - 1) / pow(p, 4)));
        CHECK(radius_below(at_zero.value, "1e-30"));
        for (unsigned long n : {1ul, 2ul, 3ul}) {
            for (const Real &x : {rat(1, 3), quarter_pi(), Real(1, 256)}) {
                const Real series = power_partial_fraction_sum(x, n, kPolicy).value;
                const Real op = iterated_operator_lhs(n, x, kPolicy);
                CHECK(series.overlaps(op));
                CHECK(radius_below(series, "1e-20"));
            }
        }
    }

    TEST_CASE("odd power difference sums")
    {
        const Real x = quarter_pi();
        CHECK(odd_power_difference_sum(x, 1, kPolicy).value.overlaps(rat(1, 2)));
        const Real p = pi(256);
        for (unsigned long n : {1ul, 2ul, 3ul}) {
            for (const Real &at : {rat(1, 5), x}) {
                const Jet<Real> t = jet_tan(at, 2 * n - 2);
                // tan^(2n-2)(x) / (2^(2n-1) (2n-2)!) = coefficient / 2^(2n-1).
                const Real expected = ldexp(t[2 * n - 2], -static_cast<long>(2 * n - 1));
                const SeriesResult r = odd_power_difference_sum(at, n, kPolicy);
                CHECK(r.value.overlaps(expected));
                CHECK(radius_below(r.value, "1e-30"));
            }
        }
        CHECK(odd_power_difference_sum(x, 2, kPolicy).value.overlaps(theorem23_lhs(2, kPolicy) * pow(inverse(p) * 2, 3)));
        CHECK(odd_power_difference_sum(Real(0, 256), 2, kPolicy).value.contains(Rational(0)));
        CHECK(odd_power_difference_sum(-x, 1, kPolicy).value.overlaps(rat(-1, 2)));
    }

    TEST_CASE("pi squared series")
    {
        const Real pi_sq = sqr(pi(256));
        for (long n : {-3l, -1l, 0l, 1l, 2l, 5l}) {
            const SeriesResult r = pi_squared_series(n, kPolicy);
            CHECK(r.value.overlaps(pi_sq));
            CHECK(radius_below(r.value, "1e-30"));
        }
        CHECK(half_pi_series(kPolicy).value.overlaps(ldexp(pi(256), -1)));
    }

    TEST_CASE("tanh minus tan partial fractions")
    {
        const Real p = pi(256);
        for (const Real &x : {p / 6, p / 10, Real(1, 256)}) {
            const SeriesResult r = tanh_tan_difference_sum(x, kPolicy);
            CHECK(r.value.overlaps((tanh(x) - tan(x)) / (x * 8)));
            CHECK(radius_below(r.value, "1e-25"));
        }
        CHECK(tanh_tan_difference_sum(Real(0, 256), kPolicy).value.contains(Rational(0)));
    }

    TEST_CASE("product expansions")
    {
        const Real one(1, 256);
        CHECK(cos_product(one, ProductVariant::cos, kPolicy).value.overlaps(cos(one)));
        CHECK(cos_product(one, ProductVariant::cosh, kPolicy).value.overlaps(cosh(one)));
        CHECK(cos_product(one, ProductVariant::cosh_cos, kPolicy).value.overlaps(cosh(one) * cos(one)));
        CHECK(radius_below(cos_product(one, ProductVariant::cosh_cos, kPolicy).value, "1e-30"));
        CHECK(cos_product(Real(0, 256), ProductVariant::cos, kPolicy).value.contains(Rational(1)));
        CHECK(cos_product(ldexp(pi(256), -1), ProductVariant::cos, kPolicy).value.contains(Rational(0)));
        const Real big = rat(25, 2);
        CHECK(cos_product(big, ProductVariant::cos, kPolicy).value.overlaps(cos(big)));
    }

    TEST_CASE("log cosh three ways")
    {
        for (const Real &x : {rat(1, 10), rat(1, 2), Real(1, 256)}) {
            const Real oracle = log(cosh(x));
            std::vector<Real> values;
            for (auto m : {LogCoshMethod::product_log, LogCoshMethod::euler_series, LogCoshMethod::zeta_series}) {
                values.push_back(log_cosh(x, m, kPolicy).value);
                CHECK(values.back().overlaps(oracle));
                CHECK(radius_below(values.back(), "1e-25"));
            }
            CHECK(values[0].overlaps(values[1]));
            CHECK(values[1].overlaps(values[2]));
            CHECK(values[0].overlaps(values[2]));
        }
        const Real x = rat(3, 2);
        CHECK(log_cosh(x, LogCoshMethod::product_log, kPolicy).value.overlaps(log(cosh(x))));
        CHECK_THROWS_AS(log_cosh(rat(8, 5), LogCoshMethod::euler_series, kPolicy), ConvergenceDomainError);
        CHECK(log_cosh(Real(0, 256), LogCoshMethod::zeta_series, kPolicy).value.contains(Rational(0)));
    }

    TEST_CASE("tanh power series")
    {
        for (const Real &x : {rat(1, 10), Real(1, 256)}) {
            CHECK(tanh_series(x, kPolicy).overlaps(tanh(x)));
        }
        CHECK(tanh_series(Real(0, 256), kPolicy).contains(Rational(0)));
        CHECK_THROWS_AS(tanh_series(Real(2, 256), kPolicy), ConvergenceDomainError);
    }

    TEST_CASE("enclosures tighten with the tolerance")
    {
        const Real x = rat(1, 3);
        const PrecisionPolicy loose(256, "1e-12");
        const PrecisionPolicy tight(256, "1e-24");
        const Real a = power_partial_fraction_sum(x, 1, loose).value;
        const Real b = power_partial_fraction_sum(x, 1, tight).value;
        CHECK(mpfr_cmp(b.rad().get(), a.rad().get()) <= 0);
        CHECK(a.overlaps(b));
        const Real c = tanh_tan_difference_sum(x, loose).value;
        const Real d = tanh_tan_difference_sum(x, tight).value;
        CHECK(mpfr_cmp(d.rad().get(), c.rad().get()) <= 0);
    }
}
