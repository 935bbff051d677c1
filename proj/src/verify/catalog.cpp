#include <cosprod/verify/suite.hpp>

#include <algorithm>
#include <string>

#include <cosprod/contfrac/catalog.hpp>
#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>
#include <cosprod/series/series.hpp>
#include <cosprod/taylor/derivatives.hpp>
#include <cosprod/verify/arguments.hpp>

namespace cosprod
{

namespace
{

using Cases = std::vector<IdentityCase>;

Real point(std::string_view text, const PrecisionPolicy &policy)
{
    return parse_real_argument(text, policy.working_bits());
}

std::string trend_note(const TrendEstimate &t)
{
    return "convergent " + std::to_string(t.depth) + " with radius 2 |c_" + std::to_string(t.depth) + " - c_" +
           std::to_string(t.reference_depth) + "| (trend, not a bound); singular convergents: " +
           std::to_string(t.singular_count);
}

std::string terms_note(const SeriesResult &r)
{
    return std::string(to_string(r.strategy)) + ", " + std::to_string(r.terms_used) + " terms";
}

void add(Cases &out, std::string id, std::string description, bool precision_limited,
         std::function<Evaluation(const PrecisionPolicy &, unsigned long)> fn)
{
    out.push_back(IdentityCase{std::move(id), std::move(description), precision_limited, std::move(fn)});
}

void add_number_tables(Cases &out)
{
    const std::vector<std::pair<unsigned long, const char *>> listed_b = {
        {0, "1"},        {1, "-1/2"},        {2, "1/6"},       {4, "-1/30"},     {6, "1/42"},
        {8, "-1/30"},    {10, "5/66"},       {12, "-691/2730"}, {14, "7/6"},     {16, "-3617/510"},
        {18, "43867/798"}, {20, "-174611/330"}};
    for (const auto &[n, text] : listed_b) {
        const Rational expected = Rational::parse(text);
        add(out, "eq1-n" + std::to_string(n), "listed Bernoulli number B_" + std::to_string(n), false,
            [n, expected](const PrecisionPolicy &, unsigned long) {
                return Evaluation{bernoulli(n), expected, ""};
            });
    }
    const std::vector<std::pair<unsigned long, const char *>> listed_e = {
        {0, "1"},      {1, "-1/2"},      {3, "1/4"},          {5, "-1/2"},        {7, "17/8"},
        {9, "-31/2"},  {11, "691/4"},    {13, "-5461/2"},     {15, "929569/16"},  {17, "-3202291/2"},
        {19, "221930581/4"}};
    for (const auto &[n, text] : listed_e) {
        const Rational expected = Rational::parse(text);
        add(out, "eq8-n" + std::to_string(n), "listed Euler number E_" + std::to_string(n), false,
            [n, expected](const PrecisionPolicy &, unsigned long) { return Evaluation{euler(n), expected, ""}; });
    }

    add(out, "eq10", "sum over n <= 30 of |E_(2n-1) + (2^(2n) - 1) B_2n / n|", false,
        [](const PrecisionPolicy &, unsigned long) {
            Rational total(0);
            for (unsigned long n = 1; n <= 30; ++n) {
                const Integer power = Integer(1) << (2 * n);
                const Rational d = euler(2 * n - 1) + Rational(Integer(power - 1)) * bernoulli(2 * n) / Rational(long(n));
                total += d.sign() < 0 ? -d : d;
            }
            return Evaluation{total, Rational(0), "exact over 1 <= n <= 30"};
        });
    for (unsigned long n = 1; n <= 8; ++n) {
        add(out, "eq10-n" + std::to_string(n), "E_(2n-1) against its odd-denominator zeta form", true,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const Bits bits = policy.working_bits();
                const Real p = pi(bits + 32);
                Real rhs = lambda_odd_denominator(n, p) * Real::from_integer(factorial(2 * n - 1), bits + 32) * 4 /
                           pow(p, 2 * n);
                if (n % 2 == 1) {
                    rhs = -rhs;
                }
                return Evaluation{euler(2 * n - 1), rhs.with_precision(bits), ""};
            });
    }
    add(out, "eq11", "sum over n <= 60 of |E_n - E_n from B_(n+1)|", false, [](const PrecisionPolicy &, unsigned long) {
        Rational total(0);
        for (unsigned long n = 0; n <= 60; ++n) {
            const Rational d = euler(n) - euler_from_bernoulli(n);
            total += d.sign() < 0 ? -d : d;
        }
        return Evaluation{total, Rational(0), "exact over 0 <= n <= 60"};
    });

    for (unsigned long n = 1; n <= 10; ++n) {
        add(out, "eq3-n" + std::to_string(n), "zeta(2n) from B_2n against 10^4 terms plus an integral tail", false,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const Bits bits = policy.working_bits();
                const unsigned long terms = 10000;
                const unsigned long s = 2 * n;
                Real sum(0, bits + 32);
                for (unsigned long k = terms; k >= 1; --k) {
                    sum += inverse(pow(Real(static_cast<long>(k), bits + 32), s));
                }
                // int_{K+1}^inf t^-s dt <= tail <= int_K^inf t^-s dt.
                const Real lo = inverse(pow(Real(static_cast<long>(terms + 1), bits + 32), s - 1) * static_cast<long>(s - 1));
                const Real hi = inverse(pow(Real(static_cast<long>(terms), bits + 32), s - 1) * static_cast<long>(s - 1));
                const Real low = sum + lo;
                const Real high = sum + hi;
                const Real direct = Real::from_bounds(low.lower(), high.upper(), bits);
                return Evaluation{zeta_even(n, policy), direct, "10000 terms, integral-test tail"};
            });
    }
}

void add_taylor(Cases &out)
{
    add(out, "eq4", "z cot z coefficients through z^20 (0 = every coefficient enclosed)", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const bool ok = cot_series_check(10, policy);
            return Evaluation{Rational(ok ? 0 : 1), Rational(0), "cos z divided by sin z / z as jets"};
        });
    for (unsigned long n = 0; n <= 8; ++n) {
        add(out, "eq13-n" + std::to_string(n), "(2n+1)! [z^(2n+1)] tan z against 2^(2n+1) (-1)^(n-1) E_(2n+1)", true,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const Bits bits = policy.working_bits();
                const Jet<Real> jet = jet_tan(Real(0, bits), 17);
                const Real lhs = jet.coeffs()[2 * n + 1] * Real::from_integer(factorial(2 * n + 1), bits);
                Rational rhs = euler(2 * n + 1) * Rational(Integer(Integer(1) << (2 * n + 1)));
                if (n % 2 == 0) {
                    rhs = -rhs;
                }
                return Evaluation{lhs, rhs, ""};
            });
    }
    for (unsigned long n : {1ul, 2ul, 3ul}) {
        for (const char *x : {"1/5", "pi/4"}) {
            add(out, "eq28-n" + std::to_string(n) + "-x" + x,
                "tan^(2n-2)(x) / (2^(2n-1) (2n-2)!) against the odd power difference sum", true,
                [n, x = std::string(x)](const PrecisionPolicy &policy, unsigned long) {
                    const Real at = point(x, policy);
                    const unsigned long k = 2 * n - 2;
                    const Real d = tan_derivative_poly(k).evaluate(tan(at));
                    const Real lhs = d / (Real::from_integer(factorial(k), policy.working_bits()) *
                                          Real::from_integer(Integer(1) << (2 * n - 1), policy.working_bits()));
                    const SeriesResult r = odd_power_difference_sum(at, n, policy);
                    return Evaluation{lhs, r.value, terms_note(r)};
                });
        }
    }
    for (unsigned long n : {1ul, 2ul, 3ul}) {
        for (const char *x : {"1/3", "pi/4", "1"}) {
            add(out, "thm2.2-n" + std::to_string(n) + "-x" + x,
                "iterated (1/(8jx)) d/dx operator against the (n+1)-th power partial fraction sum", true,
                [n, x = std::string(x)](const PrecisionPolicy &policy, unsigned long) {
                    const Real at = point(x, policy);
                    const SeriesResult r = power_partial_fraction_sum(at, n, policy);
                    return Evaluation{iterated_operator_lhs(n, at, policy), r.value, terms_note(r)};
                });
        }
    }
    for (unsigned long n = 1; n <= 8; ++n) {
        add(out, "thm2.3-n" + std::to_string(n), "derivatives of tan at pi/4 against Hurwitz zeta differences", true,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const Real lhs = theorem23_lhs(n, policy);
                if (n == 1) {
                    const SeriesResult tail = leibniz_tail_sum(policy);
                    return Evaluation{lhs, tail.value + Rational(2, 3), "1 - 1/3 + (1/5 - 1/7 + ...)"};
                }
                const unsigned long s = 2 * n - 1;
                const Real diff = hurwitz_zeta(s, Rational(1, 4), policy) - hurwitz_zeta(s, Rational(3, 4), policy);
                const Real rhs = ldexp(diff, -2 * static_cast<long>(s));
                return Evaluation{lhs, rhs, ""};
            });
    }
}

void add_series(Cases &out)
{
    for (const char *x : {"1/10", "1/3", "pi/4", "1", "pi"}) {
        const std::string tag = std::string(x).find("pi") == 0 ? std::string(x) : "x" + std::string(x);
        add(out, "eq18-" + tag, "tan(x) / (8x) against the odd partial fraction sum", true,
            [x = std::string(x)](const PrecisionPolicy &policy, unsigned long) {
                const Real at = point(x, policy);
                const SeriesResult r = odd_partial_fraction_sum(at, policy);
                return Evaluation{tan(at) / (at * 8), r.value, terms_note(r)};
            });
    }
    add(out, "eq19", "1/(3 pi^2) against the k >= 1 part of the partial fraction sum at x = pi", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const Real p = const_pi(policy);
            const Real third = inverse(sqr(p) * 3);
            const SeriesResult r = odd_partial_fraction_sum(p, policy);
            return Evaluation{third, r.value + third, terms_note(r)};
        });
    add(out, "eq20", "sum_{k>=1} 1/((2k-1)(2k+3)) = 1/3", false, [](const PrecisionPolicy &, unsigned long) {
        return Evaluation{telescoping_third(), Rational(1, 3), "telescoping closed form"};
    });
    add(out, "eq21", "1/(2 pi) - 4/(3 pi^2) against the k >= 1 part of the sum at x = pi/4", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const Real p = const_pi(policy);
            const Real first = inverse(sqr(p) * 3) * 4;
            const SeriesResult r = odd_partial_fraction_sum(ldexp(p, -2), policy);
            return Evaluation{inverse(p * 2) - first, r.value - first, terms_note(r)};
        });
    add(out, "eq23", "sum_{k>=1} (1/(4k+1) - 1/(4k+3)) = (3 pi - 8) / 12", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const SeriesResult r = leibniz_tail_sum(policy);
            return Evaluation{r.value, (const_pi(policy) * 3 - 8) / 12, terms_note(r)};
        });
    for (long n : {-3l, -1l, 0l, 1l, 2l, 5l}) {
        add(out, "thm2.4-n" + std::to_string(n), "pi^2 series with N = 2n+1", true,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const SeriesResult r = pi_squared_series(n, policy);
                return Evaluation{r.value, sqr(const_pi(policy)), terms_note(r)};
            });
    }
    add(out, "cor2.5", "pi/2 as the square root of the n = 0 series", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const SeriesResult r = half_pi_series(policy);
            return Evaluation{r.value, ldexp(const_pi(policy), -1), terms_note(r)};
        });
    const std::vector<std::pair<const char *, ProductVariant>> products = {
        {"eq16", ProductVariant::cos}, {"eq39", ProductVariant::cosh}, {"eq40", ProductVariant::cosh_cos}};
    for (const auto &[id, variant] : products) {
        add(out, std::string(id) + "-x1", std::string(to_string(variant)) + " product at x = 1", true,
            [variant](const PrecisionPolicy &policy, unsigned long) {
                const Real x(1, policy.working_bits());
                const SeriesResult r = cos_product(x, variant, policy);
                const Real closed = variant == ProductVariant::cos    ? cos(x)
                                    : variant == ProductVariant::cosh ? cosh(x)
                                                                      : cosh(x) * cos(x);
                return Evaluation{r.value, closed, terms_note(r)};
            });
    }
    add(out, "eq42-x1", "(tanh x - tan x) / (8x) against its partial fraction sum at x = 1", true,
        [](const PrecisionPolicy &policy, unsigned long) {
            const Real x(1, policy.working_bits());
            const SeriesResult r = tanh_tan_difference_sum(x, policy);
            return Evaluation{(tanh(x) - tan(x)) / 8, r.value, terms_note(r)};
        });
    for (unsigned long n : {1ul, 2ul}) {
        add(out, "eq44-n" + std::to_string(n),
            "pi/(4N) (tanh - tan)(pi/(2N)) against sum 1/(q^2 N^2 + 1) - 1/(q^2 N^2 - 1), N = 2n+1", true,
            [n](const PrecisionPolicy &policy, unsigned long) {
                const long big_n = static_cast<long>(2 * n + 1);
                const Real p = const_pi(policy);
                const Real y = p / (2 * big_n);
                const Real lhs = p / (4 * big_n) * (tanh(y) - tan(y));
                const SeriesResult r = tanh_tan_difference_sum(y, policy);
                const Real rhs = sqr(p) / (big_n * big_n) * r.value;
                return Evaluation{lhs, rhs,
                                  "first summand is 1/(" + std::to_string(big_n * big_n + 1) + ") - 1/(" +
                                      std::to_string(big_n * big_n - 1) + "); " + terms_note(r)};
            });
    }
    for (const char *x : {"1/10", "1/2", "1"}) {
        const std::vector<std::pair<LogCoshMethod, LogCoshMethod>> pairs = {
            {LogCoshMethod::product_log, LogCoshMethod::euler_series},
            {LogCoshMethod::product_log, LogCoshMethod::zeta_series},
            {LogCoshMethod::euler_series, LogCoshMethod::zeta_series}};
        for (const auto &[a, b] : pairs) {
            const auto short_name = [](LogCoshMethod m) {
                return m == LogCoshMethod::product_log ? "product" : m == LogCoshMethod::euler_series ? "euler" : "zeta";
            };
            add(out, std::string("thm2.7-x") + x + "-" + short_name(a) + ":" + short_name(b),
                "log cosh x by two expansions", true,
                [x = std::string(x), a = a, b = b](const PrecisionPolicy &policy, unsigned long) {
                    const Real at = point(x, policy);
                    const SeriesResult ra = log_cosh(at, a, policy);
                    const SeriesResult rb = log_cosh(at, b, policy);
                    return Evaluation{ra.value, rb.value, terms_note(ra) + " / " + terms_note(rb)};
                });
        }
    }
    for (const char *x : {"1/10", "1"}) {
        add(out, std::string("thm2.7-tanh-x") + x, "tanh x by its Euler number series", true,
            [x = std::string(x)](const PrecisionPolicy &policy, unsigned long) {
                const Real at = point(x, policy);
                return Evaluation{tanh_series(at, policy), tanh(at), ""};
            });
    }
}

void add_continued_fractions(Cases &out)
{
    add(out, "eq5", "pi = 4 / (1 + 1^2 / (2 + 3^2 / (2 + ...)))", false,
        [](const PrecisionPolicy &policy, unsigned long depth) {
            const TrendEstimate t = trend_estimate(cf_pi_eq5(), depth, policy.working_bits());
            return Evaluation{t.value, const_pi(policy), trend_note(t)};
        });
    add(out, "eq6", "pi = 3 + 1^2 / (6 + 3^2 / (6 + ...))", false,
        [](const PrecisionPolicy &policy, unsigned long depth) {
            const TrendEstimate t = trend_estimate(cf_pi_eq6(), depth, policy.working_bits());
            return Evaluation{t.value, const_pi(policy), trend_note(t)};
        });
    add(out, "thm2.1", "pi/4 = 2/3 + 1 / (5 + 5^2 / (2 + 7^2 / (2 + ...)))", false,
        [](const PrecisionPolicy &policy, unsigned long depth) {
            const TrendEstimate t = trend_estimate(cf_quarter_pi_thm21(), depth, policy.working_bits());
            return Evaluation{t.value, ldexp(const_pi(policy), -2), trend_note(t)};
        });
    for (unsigned long n : {1ul, 2ul}) {
        add(out, "thm2.6-n" + std::to_string(n), "tanh/tan continued fraction, odd convergents", false,
            [n](const PrecisionPolicy &policy, unsigned long depth) {
                const Thm26Study s = study_thm26(n, std::max(depth, 3ul), 1e-8, policy);
                const std::size_t pick = s.resolved.value_or(0);
                const Thm26Reading &r = s.readings[pick];
                std::string note;
                if (s.resolved) {
                    note = "resolved reading: " + std::string(to_string(r.leading)) + ", " +
                           std::string(to_string(r.sign)) + "; ";
                } else {
                    note = "no reading agrees within 1e-8; ";
                }
                note += "odd " + trend_note(s.odd) + "; even-index trend radius " + s.even.value.rad_string();
                return Evaluation{r.estimate, r.target, note};
            });
    }
}

Cases build_catalog()
{
    Cases out;
    add_number_tables(out);
    add_taylor(out);
    add_series(out);
    add_continued_fractions(out);
    std::sort(out.begin(), out.end(), [](const IdentityCase &a, const IdentityCase &b) { return a.id < b.id; });
    return out;
}

} // namespace

const std::vector<IdentityCase> &identity_catalog()
{
    static const Cases catalog = build_catalog();
    return catalog;
}

} // namespace cosprod
