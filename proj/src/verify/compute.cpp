#include <cosprod/verify/compute.hpp>

#include <functional>
#include <sstream>

#include <cosprod/contfrac/catalog.hpp>
#include <cosprod/numbers/tables.hpp>
#include <cosprod/numbers/zeta.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>
#include <cosprod/series/series.hpp>
#include <cosprod/taylor/derivatives.hpp>
#include <cosprod/verify/arguments.hpp>

namespace cosprod
{

namespace
{

using Words = std::vector<std::string>;
using Handler = std::function<ComputeResult(const Words &, const PrecisionPolicy &, unsigned long)>;

std::string ball(const Real &x)
{
    std::ostringstream out;
    out << x;
    return out.str();
}

ComputeResult from_series(const SeriesResult &r)
{
    return ComputeResult{ball(r.value),
                         {{"strategy", std::string(to_string(r.strategy))},
                          {"terms", std::to_string(r.terms_used)},
                          {"tail bound", r.tail_bound.upper().to_scientific(6)}}};
}

ComputeResult from_trend(const TrendEstimate &t)
{
    return ComputeResult{ball(t.value),
                         {{"depth", std::to_string(t.depth)},
                          {"radius", "2 |c_" + std::to_string(t.depth) + " - c_" + std::to_string(t.reference_depth) +
                                         "|, a convergence trend, not a bound"},
                          {"singular convergents", std::to_string(t.singular_count)}}};
}

ProductVariant parse_variant(const std::string &text)
{
    if (text == "cos") {
        return ProductVariant::cos;
    }
    if (text == "cosh") {
        return ProductVariant::cosh;
    }
    if (text == "cosh-cos") {
        return ProductVariant::cosh_cos;
    }
    throw UsageError("product variant must be cos, cosh or cosh-cos");
}

LogCoshMethod parse_method(const std::string &text)
{
    if (text == "product") {
        return LogCoshMethod::product_log;
    }
    if (text == "euler") {
        return LogCoshMethod::euler_series;
    }
    if (text == "zeta") {
        return LogCoshMethod::zeta_series;
    }
    throw UsageError("log-cosh method must be product, euler or zeta");
}

struct Entry {
    ComputeTarget target;
    std::size_t arity;
    Handler run;
};

Real x_arg(const Words &w, std::size_t i, const PrecisionPolicy &p)
{
    return parse_real_argument(w[i], p.working_bits());
}

const std::vector<Entry> &entries()
{
    static const std::vector<Entry> table = {
        {{"pi", "", "pi from Machin's formula"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long) {
             return ComputeResult{ball(const_pi(p)), {{"method", "16 atan(1/5) - 4 atan(1/239)"}}};
         }},
        {{"quarter_pi_cf", "", "pi/4 from the 2/3 + 1/(5 + 5^2/(2 + ...)) continued fraction"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long depth) {
             return from_trend(trend_estimate(cf_quarter_pi_thm21(), depth, p.working_bits()));
         }},
        {{"pi_cf_2", "", "pi from 4/(1 + 1^2/(2 + 3^2/(2 + ...)))"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long depth) {
             return from_trend(trend_estimate(cf_pi_eq5(), depth, p.working_bits()));
         }},
        {{"pi_cf_6", "", "pi from 3 + 1^2/(6 + 3^2/(6 + ...))"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long depth) {
             return from_trend(trend_estimate(cf_pi_eq6(), depth, p.working_bits()));
         }},
        {{"tanh_tan_cf", "n", "odd convergent of the tanh/tan continued fraction, leading (2n+1)^2+1"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long depth) {
             const unsigned long n = parse_count(w[1], "n");
             const unsigned long odd = depth % 2 == 1 ? depth : depth - 1;
             return from_trend(trend_estimate(cf_thm26(n), odd, p.working_bits()));
         }},
        {{"euler_number", "n", "exact Euler number E_n"}, 1,
         [](const Words &w, const PrecisionPolicy &, unsigned long) {
             return ComputeResult{euler(parse_count(w[1], "n")).to_string(), {{"method", "recurrence, exact"}}};
         }},
        {{"bernoulli", "n", "exact Bernoulli number B_n"}, 1,
         [](const Words &w, const PrecisionPolicy &, unsigned long) {
             return ComputeResult{bernoulli(parse_count(w[1], "n")).to_string(), {{"method", "recurrence, exact"}}};
         }},
        {{"zeta2n", "n", "zeta(2n) from B_2n"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return ComputeResult{ball(zeta_even(parse_count(w[1], "n"), p)), {{"method", "closed form in B_2n"}}};
         }},
        {{"hurwitz", "s a", "Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             Rational a;
             try {
                 a = Rational::parse(w[2]);
             } catch (const std::exception &) {
                 throw UsageError("a must be a rational such as 1/4");
             }
             return ComputeResult{ball(hurwitz_zeta(parse_count(w[1], "s"), a, p)), {{"method", "Euler-Maclaurin"}}};
         }},
        {{"odd_partial_fraction", "x", "sum_k 1/(((2k+1) pi)^2 - 4x^2) = tan(x)/(8x)"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(odd_partial_fraction_sum(x_arg(w, 1, p), p));
         }},
        {{"telescoping", "K", "exact partial sum of 1/((2k-1)(2k+3)), k = 1..K"}, 1,
         [](const Words &w, const PrecisionPolicy &, unsigned long) {
             return ComputeResult{telescoping_partial_sum(parse_count(w[1], "K")).to_string(), {{"limit", "1/3"}}};
         }},
        {{"leibniz_tail", "", "sum_{k>=1} (1/(4k+1) - 1/(4k+3))"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long) { return from_series(leibniz_tail_sum(p)); }},
        {{"power_partial_fraction", "x n", "sum_{k>=1} (((2k+1) pi)^2 - 4x^2)^-(n+1)"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(power_partial_fraction_sum(x_arg(w, 1, p), parse_count(w[2], "n"), p));
         }},
        {{"iterated_operator", "n x", "n-fold (1/(8jx)) d/dx applied to tan x/(8x) + 1/(4x^2 - pi^2)"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return ComputeResult{ball(iterated_operator_lhs(parse_count(w[1], "n"), x_arg(w, 2, p), p)),
                                  {{"method", "Taylor jets"}}};
         }},
        {{"odd_power_difference", "x n", "sum_k (((2k+1) pi - 2x)^(1-2n) - ((2k+1) pi + 2x)^(1-2n))"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(odd_power_difference_sum(x_arg(w, 1, p), parse_count(w[2], "n"), p));
         }},
        {{"tan_derivative_at_quarter_pi", "n", "(pi/4)^(2n-1) / (2n-2)! tan^(2n-2)(pi/4)"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return ComputeResult{ball(theorem23_lhs(parse_count(w[1], "n"), p)),
                                  {{"method", "derivative polynomial at tan = 1"}}};
         }},
        {{"pi_squared", "n", "pi^2 series with N = 2n+1, n any integer"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(pi_squared_series(parse_signed(w[1], "n"), p));
         }},
        {{"half_pi", "", "pi/2 as a square root of the n = 0 series"}, 0,
         [](const Words &, const PrecisionPolicy &p, unsigned long) { return from_series(half_pi_series(p)); }},
        {{"tanh_tan_difference", "x", "sum_k (1/(q^2 pi^2 + 4x^2) - 1/(q^2 pi^2 - 4x^2)), q = 2k+1"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(tanh_tan_difference_sum(x_arg(w, 1, p), p));
         }},
        {{"product", "x cos|cosh|cosh-cos", "infinite product over (2x/((2k+1) pi))^2"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(cos_product(x_arg(w, 1, p), parse_variant(w[2]), p));
         }},
        {{"log_cosh", "x product|euler|zeta", "log cosh x by one of three expansions"}, 2,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return from_series(log_cosh(x_arg(w, 1, p), parse_method(w[2]), p));
         }},
        {{"tanh_series", "x", "tanh x from Euler numbers, |x| < pi/2"}, 1,
         [](const Words &w, const PrecisionPolicy &p, unsigned long) {
             return ComputeResult{ball(tanh_series(x_arg(w, 1, p), p)), {{"method", "power series"}}};
         }},
    };
    return table;
}

} // namespace

const std::vector<ComputeTarget> &compute_targets()
{
    static const std::vector<ComputeTarget> targets = [] {
        std::vector<ComputeTarget> out;
        for (const Entry &e : entries()) {
            out.push_back(e.target);
        }
        return out;
    }();
    return targets;
}

ComputeResult compute(const std::vector<std::string> &words, const PrecisionPolicy &policy, unsigned long depth)
{
    if (words.empty()) {
        throw UsageError("compute needs a target; see 'cosprod targets'");
    }
    for (const Entry &e : entries()) {
        if (e.target.name != words[0]) {
            continue;
        }
        if (words.size() != e.arity + 1) {
            throw UsageError(words[0] + " expects arguments: " + (e.arity == 0 ? "none" : e.target.arguments));
        }
        try {
            return e.run(words, policy, depth);
        } catch (const DomainError &error) {
            throw UsageError(words[0] + ": " + error.what());
        } catch (const std::domain_error &error) {
            throw UsageError(words[0] + ": " + error.what());
        }
    }
    throw UsageError("unknown compute target '" + words[0] + "'");
}

} // namespace cosprod
