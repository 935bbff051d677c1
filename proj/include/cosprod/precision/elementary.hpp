#ifndef COSPROD_PRECISION_ELEMENTARY_HPP
#define COSPROD_PRECISION_ELEMENTARY_HPP

#include <string_view>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

enum class Elementary { tan, tanh, cos, cosh, log, sqrt, exp };

std::string_view to_string(Elementary f);

/// Enclosure of f(x) at the policy's working precision.
///
/// The midpoint is MPFR's correctly rounded f(mid x); the radius adds half an
/// ulp plus a bound on |f'| over the input interval times rad(x).
///
/// Throws DomainError for log/sqrt of intervals reaching below zero and
/// PoleStraddleError when a tan argument interval contains a pole.
Real eval_elementary(Elementary f, const Real &x, const PrecisionPolicy &policy);

/// Same as eval_elementary at the precision of the argument.
Real tan(const Real &x);
Real tanh(const Real &x);
Real cos(const Real &x);
Real cosh(const Real &x);
Real log(const Real &x);
Real sqrt(const Real &x);
Real exp(const Real &x);

/// Throws PoleStraddleError when [lower(x), upper(x)] meets pi/2 + k pi.
void require_no_tan_pole(const Real &x);

} // namespace cosprod

#endif
