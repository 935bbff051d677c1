#include <doctest.h>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/taylor/derivatives.hpp>
#include <cosprod/taylor/jet.hpp>

using namespace cosprod;

namespace
{

const PrecisionPolicy kPolicy(256, "1e-30");

Jet<Rational> rational_jet(std::vector<Rational> c)
{
    return Jet<Rational>(Rational(0), std::move(c));
}

// Sum of f(k) for k = first..last plus an enclosure [0, tail] of the rest.
template <typename F>
Real brute_sum(F f, long first, long last, const Real &tail, Bits bits)
{
    Real sum(0, bits);
    for (long k = last; k >= first; --k) {
        sum += f(k);
    }
    return hull(sum, sum + tail);
}

} // namespace

TEST_SUITE("taylor")
{
    TEST_CASE("jet arithmetic on small examples")
    {
        const auto one_plus = rational_jet({1, 1});
        CHECK((one_plus * one_plus).coeffs() == std::vector<Rational>{1, 2});
        const auto q = rational_jet({1, 0, 0}) / rational_jet({1, 1, 0});
        CHECK(q.coeffs() == std::vector<Rational>{1, -1, 1});
        CHECK(square(rational_jet({0, 1, 0})).coeffs() == std::vector<Rational>{0, 0, 1});
        CHECK(jet_lift_identity(Rational(0), 2).coeffs() == std::vector<Rational>{0, 1, 0});
        CHECK(jet_lift_identity(Rational(1), 0).coeffs() == std::vector<Rational>{1});
        CHECK((rational_jet({1, 2, 3}) + rational_jet({1, 1})).order() == 1);
        CHECK(derivative(rational_jet({5, 1, 3})).coeffs() == std::vector<Rational>{1, 6});
    }

    TEST_CASE("jet misuse is rejected")
    {
        CHECK_THROWS_AS(rational_jet({1, 1}) / rational_jet({0, 1}), JetDivisionError);
        const Jet<Rational> other(Rational(1), {Rational(1)});
        CHECK_THROWS_AS(rational_jet({1}) + other, std::invalid_argument);
        const Real fuzzy_zero = Real::from_mid_rad(BigFloat(64, 0), BigFloat(64, 1));
        CHECK_THROWS_AS(Jet<Real>(Real(), {Real(1)}) / Jet<Real>(Real(), {fuzzy_zero}), JetDivisionError);
    }

    TEST_CASE("generating function of the Euler numbers by exact jet division")
    {
        const std::size_t order = 20;
        std::vector<Rational> one_plus_exp(order + 1);
        for (std::size_t j = 0; j <= order; ++j) {
            one_plus_exp[j] = Rational(Integer(1), factorial(j));
        }
        one_plus_exp[0] += Rational(1);
        const auto g = Jet<Rational>::constant(Rational(0), Rational(2), order) / rational_jet(one_plus_exp);
        for (std::size_t n = 0; n <= order; ++n) {
            CHECK(g[n] == euler(n) / Rational(factorial(n)));
        }
    }

    TEST_CASE("tan jet at zero matches the Euler-number coefficients")
    {
        const Jet<Real> t = jet_tan(Real(0, 256), 17);
        CHECK(t[1].contains(Rational(1)));
        CHECK(t[3].contains(Rational(1, 3)));
        CHECK(t[5].contains(Rational(2, 15)));
        for (std::size_t j = 0; j <= 17; j += 2) {
            CHECK(t[j].contains(Rational(0)));
        }
        for (unsigned long n = 0; n <= 8; ++n) {
            Integer two_power;
            mpz_ui_pow_ui(two_power.get_mpz_t(), 2, 2 * n + 1);
            Rational expected = Rational(two_power) * euler(2 * n + 1);
            if (n % 2 == 0) {
                expected = -expected;
            }
            const Real scaled = t[2 * n + 1] * Rational(factorial(2 * n + 1));
            CHECK(scaled.contains(expected));
        }
    }

    TEST_CASE("tan jet at pi/4")
    {
        const Jet<Real> t = jet_tan(ldexp(pi(256), -2), 1);
        CHECK(t[0].contains(Rational(1)));
        CHECK(t[1].contains(Rational(2)));
        CHECK_THROWS_AS(jet_tan(ldexp(pi(128), -1), 3), PoleStraddleError);
    }

    TEST_CASE("tan jet agrees with the derivative polynomials")
    {
        const Bits bits = 256;
        for (const Real &x : {Real::from_rational(Rational(1, 3), bits), ldexp(pi(bits), -2), Real(1, bits)}) {
            const Jet<Real> t = jet_tan(x, 12);
            const Real tx = tan(x);
            for (std::size_t k = 0; k <= 12; ++k) {
                const Real from_jet = t[k] * Rational(factorial(k));
                CHECK(from_jet.overlaps(tan_derivative_poly(k).evaluate(tx)));
            }
        }
    }

    TEST_CASE("derivative polynomial shape")
    {
        CHECK(tan_derivative_poly(0).coeffs() == std::vector<Integer>{0, 1});
        CHECK(tan_derivative_poly(1).coeffs() == std::vector<Integer>{1, 0, 1});
        CHECK(tan_derivative_poly(2).coeffs() == std::vector<Integer>{0, 2, 0, 2});
        DerivativePolynomial p = tan_derivative_poly(0);
        for (std::size_t k = 0; k <= 40; ++k) {
            CHECK(p.degree() == k + 1);
            CHECK(p.evaluate(Integer(1)) > 0);
            for (std::size_t i = 0; i <= p.degree(); ++i) {
                if ((i + k) % 2 == 0) {
                    CHECK(p.coeffs()[i] == 0);
                }
            }
            p = p.next();
        }
    }

    TEST_CASE("cot series check")
    {
        CHECK(cot_series_check(1, kPolicy));
        CHECK(cot_series_check(10, kPolicy));
    }

    TEST_CASE("derivative-of-tan values at pi/4")
    {
        const Real p = pi(300);
        CHECK(theorem23_lhs(1, kPolicy).overlaps(ldexp(p, -2)));
        CHECK(theorem23_lhs(2, kPolicy).overlaps(pow(p, 3) / 32));

        const Bits bits = 256;
        auto pair = [&](long k) {
            return inverse(pow(Real(4 * k + 1, bits), 3)) - inverse(pow(Real(4 * k + 3, bits), 3));
        };
        // Remaining pairs are positive and bounded by 24 / (4k)^4, summing to at most 24 / (3 (4K)^3).
        const long terms = 20000;
        const Real tail = Real(24, bits) / (pow(Real(4 * terms, bits), 3) * 3);
        CHECK(theorem23_lhs(2, kPolicy).overlaps(brute_sum(pair, 0, terms, tail, bits)));

        const Real hurwitz = (hurwitz_zeta(5, Rational(1, 4), kPolicy) - hurwitz_zeta(5, Rational(3, 4), kPolicy)) /
                             1024;
        CHECK(theorem23_lhs(3, kPolicy).overlaps(hurwitz));
    }

    TEST_CASE("iterated operator at pi/4 and pi")
    {
        const Bits bits = 256;
        const Real p = pi(bits);
        auto quarter = [&](long k) { return inverse(sqr(Real((4 * k + 1) * (4 * k + 3), bits))); };
        const long terms = 3000;
        const Real tail1 = inverse(pow(Real(terms, bits), 3) * 768);
        const Real expected = brute_sum(quarter, 1, terms, tail1, bits) * 16 / pow(p, 4);
        const Real lhs = iterated_operator_lhs(1, ldexp(p, -2), kPolicy);
        CHECK(lhs.overlaps(expected));

        auto at_pi = [&](long k) { return inverse(sqr(Real((2 * k - 1) * (2 * k + 3), bits) * sqr(p))); };
        const Real tail2 = inverse(pow(Real(2 * terms - 1, bits), 3) * 6) / pow(p, 4);
        CHECK(iterated_operator_lhs(1, p, kPolicy).overlaps(brute_sum(at_pi, 1, terms, tail2, bits)));
        CHECK(radius_at_most(lhs, Real::from_decimal("1e-40", 64)));
    }
}
