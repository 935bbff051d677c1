#ifndef COSPROD_CONTFRAC_CATALOG_HPP
#define COSPROD_CONTFRAC_CATALOG_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <cosprod/contfrac/gcf.hpp>
#include <cosprod/precision/policy.hpp>

namespace cosprod
{

/// pi = 4 / (1 + 1^2 / (2 + 3^2 / (2 + 5^2 / (2 + ...)))).
Gcf cf_pi_eq5();

/// pi = 3 + 1^2 / (6 + 3^2 / (6 + 5^2 / (6 + ...))).
Gcf cf_pi_eq6();

/// pi/4 = 2/3 + 1 / (5 + 5^2 / (2 + 7^2 / (2 + 9^2 / (2 + ...)))).
Gcf cf_quarter_pi_thm21();

/// Where the tanh/tan family starts: m + 1 as printed, or m, with m = (2n+1)^2.
enum class Thm26Leading { printed, bare };

/// Family with odd terms (((2j-1)^2 m + 1)^2, -2) and even terms
/// (((2j-1)^2 m - 1)^2, 8 j m + 2), m = (2n+1)^2, n >= 1.
Gcf cf_thm26(unsigned long n, Thm26Leading leading = Thm26Leading::printed);

/// Convergent at `depth` with radius 2 |c_depth - c_half|, where half is the
/// index of the same parity nearest depth / 2. The radius is a convergence
/// trend, not a bound. Singular convergents step back to the previous
/// regular index of the same parity.
struct TrendEstimate {
    Real value;
    unsigned long depth;
    unsigned long reference_depth;
    std::size_t singular_count;
};

TrendEstimate trend_estimate(const Gcf &cf, unsigned long depth, Bits bits);

enum class Thm26Sign { signed_lhs, negated_lhs };

std::string_view to_string(Thm26Leading leading);
std::string_view to_string(Thm26Sign sign);

/// (S)^(-1) or (-S)^(-1) with S = (pi/4) (tanh y - tan y) / (2n+1), y = pi / (2 (2n+1)).
Real thm26_target(unsigned long n, Thm26Sign sign, const PrecisionPolicy &policy);

struct Thm26Reading {
    Thm26Leading leading;
    Thm26Sign sign;
    Real target;
    Real estimate;
    double gap;
    bool matches;
};

/// Compares the odd-indexed convergents against every reading of the target.
///
/// A reading matches when the estimate's trend radius and its distance to
/// the target are both at most `agreement`. Even-indexed convergents are
/// reported separately because they settle much more slowly.
struct Thm26Study {
    unsigned long n;
    TrendEstimate odd;
    TrendEstimate even;
    std::vector<Thm26Reading> readings;
    std::optional<std::size_t> resolved;
};

Thm26Study study_thm26(unsigned long n, unsigned long depth, double agreement, const PrecisionPolicy &policy);

} // namespace cosprod

#endif
