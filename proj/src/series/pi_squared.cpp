#include <cosprod/series/series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/elementary.hpp>

#include "tails.hpp"

namespace cosprod
{

namespace
{

struct OddSum {
    Real value;
    unsigned long terms;
    Real remainder;
};

// sum_{k>=0} (4 + N^2 q^2) / (4 - N^2 q^2)^2, q = 2k+1.
OddSum odd_square_sum(long big_n, const PrecisionPolicy &policy)
{
    const Bits work = policy.working_bits() + detail::series_guard;
    const double goal = detail::goal_log2(policy);
    const long n_sq = big_n * big_n;

    // w = 4 / (N^2 (2K+1)^2) <= 1/16.
    unsigned long cut = 1;
    while (static_cast<double>(n_sq) * std::pow(2.0 * static_cast<double>(cut) + 1.0, 2.0) < 64.0) {
        ++cut;
    }
    const long d = static_cast<long>(2 * cut + 1);
    const Rational w(4, n_sq * d * d);
    const double w_est = 4.0 / (static_cast<double>(n_sq) * static_cast<double>(d * d));

    // Remainder after J terms: (M_0 / N^2) w^(J+1) [(2J+3)/(1-w) + 2w/(1-w)^2], with M_0 < 1/2.
    unsigned long count = 1;
    while (true) {
        const double j = static_cast<double>(count - 1);
        const double bound = std::log2(0.5) + (j + 1.0) * std::log2(w_est) +
                             std::log2((2.0 * j + 3.0) / (1.0 - w_est) + 2.0 * w_est / std::pow(1.0 - w_est, 2.0));
        if (bound < goal) {
            break;
        }
        ++count;
    }

    Rational head;
    for (unsigned long k = 0; k < cut; ++k) {
        const long q = static_cast<long>(2 * k + 1);
        const long nq2 = n_sq * q * q;
        head += Rational(4 + nq2, (4 - nq2) * (4 - nq2));
    }

    const Bits pbits = detail::moment_bits(work, count, cut);
    const std::vector<Real> tails = detail::odd_moment_tails(count, cut, pi(pbits));

    // Tail: sum_j (2j+1) 4^j N^(-2j-2) M_j.
    Real tail(0, pbits);
    Rational weight(1, n_sq);
    for (unsigned long j = 0; j < count; ++j) {
        tail += tails[j + 1] * (weight * Rational(static_cast<long>(2 * j + 1)));
        weight *= Rational(4, n_sq);
    }

    const Rational one_minus = Rational(1) - w;
    const auto big_j = static_cast<long>(count - 1);
    const Rational shape = Rational(2 * big_j + 3) / one_minus + Rational(2) * w / (one_minus * one_minus);
    Real remainder = tails[1] * (pow(w, static_cast<unsigned long>(big_j + 1)) * shape / Rational(n_sq));
    remainder = Real::from_mid_rad(BigFloat(64, 0), abs(remainder).upper());

    const Real value = (Real::from_rational(head, pbits) + tail).add_error(remainder.rad());
    return OddSum{value, cut, remainder};
}

} // namespace

SeriesResult pi_squared_series(long n, const PrecisionPolicy &policy)
{
    const long big_n = 2 * n + 1;
    const OddSum s = odd_square_sum(big_n, policy);
    const Bits work = policy.working_bits() + detail::series_guard;
    const Real c = cos(pi(work) / big_n);
    const Real value = sqr(c) * s.value * (8 * big_n * big_n);
    return SeriesResult{value.with_precision(policy.working_bits()), s.terms, s.remainder,
                        SeriesStrategy::zeta_accelerated};
}

SeriesResult half_pi_series(const PrecisionPolicy &policy)
{
    const OddSum s = odd_square_sum(1, policy);
    const Real value = sqrt(ldexp(s.value, 1));
    return SeriesResult{value.with_precision(policy.working_bits()), s.terms, s.remainder,
                        SeriesStrategy::zeta_accelerated};
}

} // namespace cosprod
