#include <cosprod/contfrac/gcf.hpp>

#include <algorithm>
#include <stdexcept>

#include <cosprod/precision/errors.hpp>

namespace cosprod
{

Gcf::Gcf(std::string name, Rational leading, Generator generator)
    : m_name(std::move(name)), m_leading(std::move(leading)), m_generator(std::move(generator))
{
}

Gcf::Term Gcf::term(unsigned long k) const
{
    if (k == 0) {
        throw std::out_of_range("continued fraction terms start at k = 1");
    }
    Term t = m_generator(k);
    if (t.first.is_zero()) {
        throw std::logic_error(m_name + ": partial numerator a_" + std::to_string(k) + " is zero");
    }
    return t;
}

ConvergentStream::ConvergentStream(const Gcf &cf)
    : m_cf(cf), m_p(cf.leading()), m_q(1), m_p_prev(1), m_q_prev(0)
{
}

void ConvergentStream::advance()
{
    ++m_index;
    const auto [a, b] = m_cf.term(m_index);
    Rational p = b * m_p + a * m_p_prev;
    Rational q = b * m_q + a * m_q_prev;
    m_p_prev = std::move(m_p);
    m_q_prev = std::move(m_q);
    m_p = std::move(p);
    m_q = std::move(q);
}

std::optional<Rational> ConvergentStream::value() const
{
    if (singular()) {
        return std::nullopt;
    }
    return m_p / m_q;
}

std::optional<Real> ConvergentStream::value(Bits bits) const
{
    if (singular()) {
        return std::nullopt;
    }
    return Real::from_rational(m_p, bits + 8) / Real::from_rational(m_q, bits + 8);
}

void ConvergentSequence::push(const Rational &p, const Rational &q)
{
    m_p.push_back(p);
    m_q.push_back(q);
}

std::optional<Rational> ConvergentSequence::value(std::size_t k) const
{
    if (singular(k)) {
        return std::nullopt;
    }
    return m_p.at(k) / m_q.at(k);
}

std::size_t ConvergentSequence::singular_count() const
{
    return static_cast<std::size_t>(std::count_if(m_q.begin(), m_q.end(), [](const Rational &q) { return q.is_zero(); }));
}

GcfEvaluation eval_gcf(const Gcf &cf, unsigned long depth, const PrecisionPolicy &policy, std::size_t keep)
{
    const Bits bits = policy.working_bits();
    ConvergentStream stream(cf);
    ConvergentSequence recorded;
    using Pair = std::pair<Rational, Rational>;
    std::optional<Pair> last;
    std::optional<Pair> before_last;
    unsigned long last_index = 0;
    std::size_t singular = 0;

    for (;;) {
        if (stream.index() <= keep) {
            recorded.push(stream.p(), stream.q());
        }
        if (stream.singular()) {
            ++singular;
        } else {
            before_last = std::move(last);
            last = Pair(stream.p(), stream.q());
            last_index = stream.index();
        }
        if (stream.index() == depth) {
            break;
        }
        stream.advance();
    }
    if (!last) {
        throw SingularConvergentError(cf.name() + ": every convergent up to the requested depth is singular");
    }

    auto to_real = [&](const Pair &pq) {
        return Real::from_rational(pq.first, bits + 8) / Real::from_rational(pq.second, bits + 8);
    };
    const Real final_value = to_real(*last);
    Real value = final_value.with_precision(bits);
    if (before_last) {
        value = value.add_error(abs(final_value - to_real(*before_last)).upper());
    }
    return GcfEvaluation{value, std::move(recorded), depth, last_index, singular, false};
}

std::vector<ConvergentSample> sample_convergents(const Gcf &cf, std::vector<unsigned long> depths, Bits bits)
{
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
    std::vector<ConvergentSample> out;
    out.reserve(depths.size());
    ConvergentStream stream(cf);
    for (unsigned long d : depths) {
        while (stream.index() < d) {
            stream.advance();
        }
        out.push_back(ConvergentSample{d, stream.value(bits)});
    }
    return out;
}

bool determinant_identity_holds(const Gcf &cf, unsigned long depth)
{
    ConvergentStream stream(cf);
    Rational product(1);
    // k = 0: p_0 q_{-1} - p_{-1} q_0 = -1.
    if (stream.p() * stream.previous_q() - stream.previous_p() * stream.q() != Rational(-1)) {
        return false;
    }
    for (unsigned long k = 1; k <= depth; ++k) {
        stream.advance();
        product *= cf.term(k).first;
        const Rational lhs = stream.p() * stream.previous_q() - stream.previous_p() * stream.q();
        const Rational rhs = k % 2 == 1 ? product : -product;
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

} // namespace cosprod
