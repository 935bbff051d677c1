#ifndef COSPROD_TAYLOR_JET_HPP
#define COSPROD_TAYLOR_JET_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <cosprod/precision/errors.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

namespace detail
{

inline bool same_point(const Rational &a, const Rational &b)
{
    return a == b;
}

inline bool same_point(const Real &a, const Real &b)
{
    return mpfr_equal_p(a.mid().get(), b.mid().get()) && mpfr_equal_p(a.rad().get(), b.rad().get());
}

inline bool invertible(const Rational &x)
{
    return !x.is_zero();
}

inline bool invertible(const Real &x)
{
    return x.excludes_zero();
}

inline Rational zero_like(const Rational &)
{
    return Rational();
}

inline Real zero_like(const Real &x)
{
    return Real(0, x.precision());
}

} // namespace detail

/// Truncated Taylor expansion of a function at a point.
///
/// coeffs[j] = f^(j)(center) / j!. Scalar is Rational for exact work or Real
/// for enclosures. Binary operations require equal centers and truncate to
/// the lower order.
template <typename Scalar>
class Jet
{
public:
    Jet(Scalar center, std::vector<Scalar> coeffs) : m_center(std::move(center)), m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a jet needs at least one coefficient");
        }
    }

    /// Jet of the constant `value`, of the given order.
    static Jet constant(const Scalar &center, const Scalar &value, std::size_t order)
    {
        std::vector<Scalar> coeffs(order + 1, detail::zero_like(value));
        coeffs[0] = value;
        return Jet(center, std::move(coeffs));
    }

    const Scalar &center() const noexcept
    {
        return m_center;
    }
    const std::vector<Scalar> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    const Scalar &operator[](std::size_t j) const
    {
        return m_coeffs.at(j);
    }
    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }

    Jet truncated(std::size_t order) const
    {
        const std::size_t n = std::min(order, this->order()) + 1;
        return Jet(m_center, std::vector<Scalar>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(n)));
    }

private:
    Scalar m_center;
    std::vector<Scalar> m_coeffs;
};

namespace detail
{

template <typename Scalar>
std::size_t common_order(const Jet<Scalar> &f, const Jet<Scalar> &g)
{
    if (!same_point(f.center(), g.center())) {
        throw std::invalid_argument("jets expanded at different points");
    }
    return std::min(f.order(), g.order());
}

} // namespace detail

/// Jet of the identity map at `a`: [a, 1, 0, ...].
template <typename Scalar>
Jet<Scalar> jet_lift_identity(const Scalar &a, std::size_t order)
{
    std::vector<Scalar> coeffs(order + 1, detail::zero_like(a));
    coeffs[0] = a;
    if (order >= 1) {
        coeffs[1] = Scalar(1);
    }
    return Jet<Scalar>(a, std::move(coeffs));
}

template <typename Scalar>
Jet<Scalar> operator+(const Jet<Scalar> &f, const Jet<Scalar> &g)
{
    const std::size_t n = detail::common_order(f, g);
    std::vector<Scalar> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        out.push_back(f[j] + g[j]);
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

template <typename Scalar>
Jet<Scalar> operator-(const Jet<Scalar> &f, const Jet<Scalar> &g)
{
    const std::size_t n = detail::common_order(f, g);
    std::vector<Scalar> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        out.push_back(f[j] - g[j]);
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

/// Cauchy product.
template <typename Scalar>
Jet<Scalar> operator*(const Jet<Scalar> &f, const Jet<Scalar> &g)
{
    const std::size_t n = detail::common_order(f, g);
    std::vector<Scalar> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Scalar acc = f[0] * g[j];
        for (std::size_t i = 1; i <= j; ++i) {
            acc += f[i] * g[j - i];
        }
        out.push_back(std::move(acc));
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

template <typename Scalar>
Jet<Scalar> square(const Jet<Scalar> &f)
{
    return f * f;
}

/// Power-series division. Throws JetDivisionError when g's constant term may vanish.
template <typename Scalar>
Jet<Scalar> operator/(const Jet<Scalar> &f, const Jet<Scalar> &g)
{
    const std::size_t n = detail::common_order(f, g);
    if (!detail::invertible(g[0])) {
        throw JetDivisionError("jet division by a series whose constant term may be zero");
    }
    std::vector<Scalar> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Scalar acc = f[j];
        for (std::size_t i = 1; i <= j; ++i) {
            acc -= g[i] * out[j - i];
        }
        out.push_back(acc / g[0]);
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

template <typename Scalar>
Jet<Scalar> operator*(const Jet<Scalar> &f, const Scalar &c)
{
    std::vector<Scalar> out;
    out.reserve(f.order() + 1);
    for (const Scalar &x : f.coeffs()) {
        out.push_back(x * c);
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

template <typename Scalar>
Jet<Scalar> operator+(const Jet<Scalar> &f, const Scalar &c)
{
    std::vector<Scalar> out = f.coeffs();
    out[0] = out[0] + c;
    return Jet<Scalar>(f.center(), std::move(out));
}

/// Jet of f' with one order fewer; a jet of order 0 yields the zero jet of order 0.
template <typename Scalar>
Jet<Scalar> derivative(const Jet<Scalar> &f)
{
    if (f.order() == 0) {
        return Jet<Scalar>(f.center(), {detail::zero_like(f[0])});
    }
    std::vector<Scalar> out;
    out.reserve(f.order());
    for (std::size_t j = 1; j <= f.order(); ++j) {
        out.push_back(f[j] * Scalar(static_cast<long>(j)));
    }
    return Jet<Scalar>(f.center(), std::move(out));
}

} // namespace cosprod

#endif
