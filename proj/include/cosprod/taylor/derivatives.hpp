#ifndef COSPROD_TAYLOR_DERIVATIVES_HPP
#define COSPROD_TAYLOR_DERIVATIVES_HPP

#include <cstddef>
#include <vector>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>
#include <cosprod/taylor/jet.hpp>

namespace cosprod
{

/// Jet of tan at `a`, from t' = 1 + t^2: (j+1) c_{j+1} = [1 + T^2]_j.
/// Throws PoleStraddleError when `a` may sit on a pole.
Jet<Real> jet_tan(const Real &a, std::size_t order);

/// Checks the z cot z expansion: coefficient 2n of cos z / (sin z / z) must
/// enclose (-1)^n 2^(2n) B_2n / (2n)! for every n <= k.
bool cot_series_check(std::size_t k, const PrecisionPolicy &policy);

/// Integer polynomial P_k with d^k/dx^k tan x = P_k(tan x).
class DerivativePolynomial
{
public:
    explicit DerivativePolynomial(std::vector<Integer> coeffs);

    /// Coefficient of t^i, with i <= degree().
    const std::vector<Integer> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    std::size_t degree() const noexcept
    {
        return m_coeffs.size() - 1;
    }

    Integer evaluate(const Integer &t) const;
    Real evaluate(const Real &t) const;

    /// (1 + t^2) P'(t).
    DerivativePolynomial next() const;

private:
    std::vector<Integer> m_coeffs;
};

/// P_0 = t, P_{k+1} = (1 + t^2) P_k'.
DerivativePolynomial tan_derivative_poly(std::size_t k);

/// (pi/4)^(2n-1) / (2n-2)! * P_{2n-2}(1), for n >= 1.
Real theorem23_lhs(unsigned long n, const PrecisionPolicy &policy);

/// The n-fold operator (1/(8jx)) d/dx, j = 1..n, applied to
/// tan x / (8x) + 1 / (4x^2 - pi^2) and evaluated at x.
///
/// Works on a jet of order n at x; each stage consumes one order.
/// Throws PoleStraddleError, or JetDivisionError when x may be zero.
Real iterated_operator_lhs(unsigned long n, const Real &x, const PrecisionPolicy &policy);

} // namespace cosprod

#endif
