#include <doctest.h>

#include <cmath>

#include <cosprod/contfrac/catalog.hpp>
#include <cosprod/contfrac/gcf.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>

using namespace cosprod;

namespace
{

// Bottom-up evaluation of the truncated fraction, independent of the recurrence.
Rational backward_value(const Gcf &cf, unsigned long depth)
{
    if (depth == 0) {
        return cf.leading();
    }
    Rational tail = cf.term(depth).second;
    for (unsigned long k = depth; k-- > 1;) {
        const auto [a, b] = cf.term(k + 1);
        (void)b;
        tail = cf.term(k).second + a / tail;
    }
    return cf.leading() + cf.term(1).first / tail;
}

double error_at(const Gcf &cf, unsigned long depth, double target)
{
    const auto samples = sample_convergents(cf, {depth}, 128);
    return samples.front().value->mid_double() - target;
}

} // namespace

TEST_SUITE("contfrac")
{
    TEST_CASE("hand-computed convergents")
    {
        const GcfEvaluation eq5 = eval_gcf(cf_pi_eq5(), 3, PrecisionPolicy());
        CHECK(eq5.convergents.value(3) == Rational(52, 15));
        const GcfEvaluation eq6 = eval_gcf(cf_pi_eq6(), 2, PrecisionPolicy());
        CHECK(eq6.convergents.value(1) == Rational(19, 6));
        const GcfEvaluation quarter = eval_gcf(cf_quarter_pi_thm21(), 2, PrecisionPolicy());
        CHECK(quarter.convergents.value(1) == Rational(13, 15));
        CHECK(quarter.convergents.value(2) == Rational(76, 105));
    }

    TEST_CASE("recurrence agrees with bottom-up evaluation")
    {
        for (const Gcf &cf : {cf_pi_eq5(), cf_pi_eq6(), cf_quarter_pi_thm21(), cf_thm26(1), cf_thm26(3)}) {
            const GcfEvaluation ev = eval_gcf(cf, 40, PrecisionPolicy());
            for (unsigned long d = 1; d <= 40; ++d) {
                if (!ev.convergents.singular(d)) {
                    CHECK(*ev.convergents.value(d) == backward_value(cf, d));
                }
            }
        }
    }

    TEST_CASE("determinant identity to depth 200")
    {
        CHECK(determinant_identity_holds(cf_pi_eq5(), 200));
        CHECK(determinant_identity_holds(cf_pi_eq6(), 200));
        CHECK(determinant_identity_holds(cf_quarter_pi_thm21(), 200));
        for (unsigned long n = 1; n <= 4; ++n) {
            CHECK(determinant_identity_holds(cf_thm26(n), 200));
        }
    }

    TEST_CASE("streamed evaluation keeps a prefix and matches sampling")
    {
        const Gcf cf = cf_pi_eq6();
        const GcfEvaluation ev = eval_gcf(cf, 1000, PrecisionPolicy(), 32);
        CHECK(ev.convergents.size() == 33);
        CHECK(ev.depth == 1000);
        CHECK(ev.last_regular == 1000);
        CHECK_FALSE(ev.rigorous);
        const auto samples = sample_convergents(cf, {1000}, PrecisionPolicy().working_bits());
        CHECK(ev.value.overlaps(*samples.front().value));
    }

    TEST_CASE("convergence trends against the MPFR value of pi")
    {
        const double p = M_PI;
        // Alternating errors of size about 1/k.
        const double e100 = error_at(cf_pi_eq5(), 100, p);
        const double e101 = error_at(cf_pi_eq5(), 101, p);
        CHECK(e100 * e101 < 0);
        CHECK(std::fabs(e100) < 0.05);
        // Cubic decay for the 6-denominator fraction.
        const double e50 = std::fabs(error_at(cf_pi_eq6(), 50, p));
        const double e200 = std::fabs(error_at(cf_pi_eq6(), 200, p));
        CHECK(e200 < 1e-7);
        CHECK(e50 / e200 > 40);
        // Error close to -1/(4d) for the quarter-pi fraction.
        const double q1000 = error_at(cf_quarter_pi_thm21(), 1000, p / 4);
        CHECK(q1000 * 4000 == doctest::Approx(-1.0).epsilon(0.02));
    }

    TEST_CASE("tanh/tan fraction: odd convergents settle on the signed reciprocal")
    {
        const Thm26Study study = study_thm26(1, 1001, 1e-7, PrecisionPolicy());
        REQUIRE(study.resolved.has_value());
        const Thm26Reading &r = study.readings[*study.resolved];
        CHECK(r.leading == Thm26Leading::printed);
        CHECK(r.sign == Thm26Sign::signed_lhs);
        CHECK(r.target.mid_double() == doctest::Approx(-39.4283397873866).epsilon(1e-12));
        CHECK(study.odd.depth == 1001);
        CHECK(study.even.value.rad_double() > study.odd.value.rad_double());
        // The bare leading term is off by exactly one.
        for (const Thm26Reading &other : study.readings) {
            if (other.leading == Thm26Leading::bare && other.sign == Thm26Sign::signed_lhs) {
                CHECK(other.gap == doctest::Approx(1.0).epsilon(1e-6));
            }
        }
    }

    TEST_CASE("tanh/tan target for n = 2")
    {
        const Real t = thm26_target(2, Thm26Sign::signed_lhs, PrecisionPolicy());
        CHECK(t.mid_double() == doctest::Approx(-307.493742350424).epsilon(1e-12));
    }

    TEST_CASE("misuse")
    {
        CHECK_THROWS_AS(cf_thm26(0), DomainError);
        CHECK_THROWS_AS(cf_pi_eq6().term(0), std::out_of_range);
        const Gcf zero("zero", Rational(1), [](unsigned long) -> Gcf::Term { return {Rational(0), Rational(1)}; });
        CHECK_THROWS_AS(zero.term(1), std::logic_error);
        // b_k = 0 everywhere with a_k = 1 gives q_1 = 0.
        const Gcf flat("flat", Rational(0), [](unsigned long) -> Gcf::Term { return {Rational(1), Rational(0)}; });
        const GcfEvaluation ev = eval_gcf(flat, 5, PrecisionPolicy());
        CHECK(ev.singular_count > 0);
    }
}
