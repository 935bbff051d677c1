#include <cosprod/verify/arguments.hpp>

#include <charconv>
#include <string>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>
#include <cosprod/precision/rational.hpp>

namespace cosprod
{

namespace
{

Rational parse_factor(std::string_view text, std::string_view whole)
{
    try {
        return Rational::parse(std::string(text));
    } catch (const std::exception &) {
        throw UsageError("cannot parse '" + std::string(whole) + "' as a number or multiple of pi");
    }
}

} // namespace

Real parse_real_argument(std::string_view text, Bits bits)
{
    const std::size_t at = text.find("pi");
    if (at == std::string_view::npos) {
        if (text.find_first_of(".eE") != std::string_view::npos) {
            try {
                return Real::from_decimal(text, bits);
            } catch (const std::exception &) {
                throw UsageError("cannot parse '" + std::string(text) + "' as a decimal");
            }
        }
        return Real::from_rational(parse_factor(text, text), bits);
    }
    Rational scale(1);
    std::string_view head = text.substr(0, at);
    if (head == "-") {
        scale = Rational(-1);
    } else if (!head.empty()) {
        if (head.back() != '*') {
            throw UsageError("expected '*' before pi in '" + std::string(text) + "'");
        }
        scale = parse_factor(head.substr(0, head.size() - 1), text);
    }
    std::string_view tail = text.substr(at + 2);
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw UsageError("expected '/' after pi in '" + std::string(text) + "'");
        }
        const Rational divisor = parse_factor(tail.substr(1), text);
        if (divisor.is_zero()) {
            throw UsageError("division by zero in '" + std::string(text) + "'");
        }
        scale = scale / divisor;
    }
    return (pi(bits + 16) * scale).with_precision(bits);
}

unsigned long parse_count(std::string_view text, std::string_view what)
{
    unsigned long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

long parse_signed(std::string_view text, std::string_view what)
{
    long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw UsageError(std::string(what) + " must be an integer, got '" + std::string(text) + "'");
    }
    return value;
}

} // namespace cosprod
