#ifndef COSPROD_VERIFY_ARGUMENTS_HPP
#define COSPROD_VERIFY_ARGUMENTS_HPP

#include <string_view>

#include <cosprod/precision/real.hpp>

namespace cosprod
{

/// Parses a point such as "1/3", "0.25", "-2", "pi", "pi/4" or "3*pi/10".
/// Throws UsageError on anything else.
Real parse_real_argument(std::string_view text, Bits bits);

/// Parses a non-negative decimal integer. Throws UsageError otherwise.
unsigned long parse_count(std::string_view text, std::string_view what);

/// Parses a possibly negative decimal integer. Throws UsageError otherwise.
long parse_signed(std::string_view text, std::string_view what);

} // namespace cosprod

#endif
