#include <cosprod/taylor/derivatives.hpp>

#include <utility>

#include <cosprod/numbers/tables.hpp>
#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>

namespace cosprod
{

Jet<Real> jet_tan(const Real &a, std::size_t order)
{
    std::vector<Real> c;
    c.reserve(order + 1);
    c.push_back(tan(a));
    for (std::size_t j = 0; j < order; ++j) {
        // [T^2]_j only needs c_0 .. c_j.
        Real acc = c[0] * c[j];
        for (std::size_t i = 1; i <= j; ++i) {
            acc += c[i] * c[j - i];
        }
        if (j == 0) {
            acc += Real(1, a.precision());
        }
        c.push_back(acc / static_cast<long>(j + 1));
    }
    return Jet<Real>(a, std::move(c));
}

bool cot_series_check(std::size_t k, const PrecisionPolicy &policy)
{
    const Bits bits = policy.working_bits();
    const std::size_t order = 2 * k;
    const Real zero(0, bits);
    std::vector<Real> cos_coeffs(order + 1, zero);
    std::vector<Real> sinc_coeffs(order + 1, zero);
    for (std::size_t i = 0; 2 * i <= order; ++i) {
        const long sign = i % 2 == 0 ? 1 : -1;
        cos_coeffs[2 * i] = Real::from_rational(Rational(Integer(sign), factorial(2 * i)), bits);
        sinc_coeffs[2 * i] = Real::from_rational(Rational(Integer(sign), factorial(2 * i + 1)), bits);
    }
    const Jet<Real> quotient = Jet<Real>(zero, cos_coeffs) / Jet<Real>(zero, sinc_coeffs);
    for (std::size_t n = 0; n <= k; ++n) {
        Integer two_power;
        mpz_ui_pow_ui(two_power.get_mpz_t(), 2, 2 * n);
        Rational expected = Rational(two_power) * bernoulli(2 * n) / Rational(factorial(2 * n));
        if (n % 2 == 1) {
            expected = -expected;
        }
        if (!quotient[2 * n].contains(expected)) {
            return false;
        }
        if (2 * n + 1 <= order && !quotient[2 * n + 1].contains(Rational(0))) {
            return false;
        }
    }
    return true;
}

DerivativePolynomial::DerivativePolynomial(std::vector<Integer> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        m_coeffs.emplace_back(0);
    }
}

Integer DerivativePolynomial::evaluate(const Integer &t) const
{
    Integer acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Real DerivativePolynomial::evaluate(const Real &t) const
{
    Real acc(0, t.precision());
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * t + Real::from_integer(*it, t.precision());
    }
    return acc;
}

DerivativePolynomial DerivativePolynomial::next() const
{
    // P' has degree d-1; (1 + t^2) P' has degree d+1.
    const std::size_t d = degree();
    std::vector<Integer> out(d + 2, Integer(0));
    for (std::size_t i = 1; i <= d; ++i) {
        const Integer di = m_coeffs[i] * static_cast<unsigned long>(i);
        out[i - 1] += di;
        out[i + 1] += di;
    }
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    return DerivativePolynomial(std::move(out));
}

DerivativePolynomial tan_derivative_poly(std::size_t k)
{
    DerivativePolynomial p({Integer(0), Integer(1)});
    for (std::size_t i = 0; i < k; ++i) {
        p = p.next();
    }
    return p;
}

Real theorem23_lhs(unsigned long n, const PrecisionPolicy &policy)
{
    if (n == 0) {
        throw DomainError("theorem23_lhs requires n >= 1");
    }
    const Bits bits = policy.working_bits();
    const Integer at_one = tan_derivative_poly(2 * n - 2).evaluate(Integer(1));
    const Real quarter_pi = ldexp(pi(bits + 32), -2);
    const Real value = pow(quarter_pi, 2 * n - 1) * Rational(at_one, factorial(2 * n - 2));
    return value.with_precision(bits);
}

Real iterated_operator_lhs(unsigned long n, const Real &x, const PrecisionPolicy &policy)
{
    if (n == 0) {
        throw DomainError("iterated_operator_lhs requires n >= 1");
    }
    const Bits work = policy.working_bits() + 64;
    const Real at = x.precision() < work ? x.with_precision(work) : x;
    const Jet<Real> id = jet_lift_identity(at, n);
    const Real one(1, work);
    const Real pi_sq = sqr(pi(work));

    // g = tan x / (8x) + 1 / (4x^2 - pi^2)
    const Jet<Real> eight_x = id * Real(8, work);
    const Jet<Real> quadratic = square(id) * Real(4, work) + (-pi_sq);
    Jet<Real> h = jet_tan(at, n) / eight_x + Jet<Real>::constant(at, one, n) / quadratic;

    for (unsigned long j = 1; j <= n; ++j) {
        const Jet<Real> d = derivative(h);
        const Jet<Real> scaled_x = jet_lift_identity(at, d.order()) * Real(static_cast<long>(8 * j), work);
        h = d / scaled_x;
    }
    return h[0].with_precision(policy.working_bits());
}

} // namespace cosprod
