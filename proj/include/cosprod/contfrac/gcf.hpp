#ifndef COSPROD_CONTFRAC_GCF_HPP
#define COSPROD_CONTFRAC_GCF_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

/// Generalized continued fraction b_0 + a_1 / (b_1 + a_2 / (b_2 + ...)).
///
/// Terms are produced on demand by a pure generator, so asking for term k
/// twice gives the same pair.
class Gcf
{
public:
    using Term = std::pair<Rational, Rational>; // (a_k, b_k)
    using Generator = std::function<Term(unsigned long)>;

    Gcf(std::string name, Rational leading, Generator generator);

    const std::string &name() const noexcept
    {
        return m_name;
    }
    const Rational &leading() const noexcept
    {
        return m_leading;
    }
    /// (a_k, b_k) for k >= 1. Throws std::out_of_range for k = 0 and
    /// std::logic_error if the generator yields a_k = 0.
    Term term(unsigned long k) const;

private:
    std::string m_name;
    Rational m_leading;
    Generator m_generator;
};

/// Forward recurrence p_k = b_k p_{k-1} + a_k p_{k-2}, q likewise, seeded with
/// p_{-1} = 1, q_{-1} = 0, p_0 = b_0, q_0 = 1.
class ConvergentStream
{
public:
    explicit ConvergentStream(const Gcf &cf);

    /// Moves from index k to k + 1.
    void advance();

    unsigned long index() const noexcept
    {
        return m_index;
    }
    const Rational &p() const noexcept
    {
        return m_p;
    }
    const Rational &q() const noexcept
    {
        return m_q;
    }
    const Rational &previous_p() const noexcept
    {
        return m_p_prev;
    }
    const Rational &previous_q() const noexcept
    {
        return m_q_prev;
    }
    /// True when q_k = 0, so p_k / q_k is undefined.
    bool singular() const
    {
        return m_q.is_zero();
    }
    std::optional<Rational> value() const;
    /// p_k / q_k as a ball at `bits`, without forming the exact quotient.
    std::optional<Real> value(Bits bits) const;

private:
    const Gcf &m_cf;
    unsigned long m_index = 0;
    Rational m_p, m_q, m_p_prev, m_q_prev;
};

/// Convergents p_k, q_k for k = 0..size()-1.
class ConvergentSequence
{
public:
    void push(const Rational &p, const Rational &q);

    std::size_t size() const noexcept
    {
        return m_p.size();
    }
    const Rational &p(std::size_t k) const
    {
        return m_p.at(k);
    }
    const Rational &q(std::size_t k) const
    {
        return m_q.at(k);
    }
    bool singular(std::size_t k) const
    {
        return m_q.at(k).is_zero();
    }
    /// p_k / q_k, or nullopt at a singular index.
    std::optional<Rational> value(std::size_t k) const;
    std::size_t singular_count() const;

private:
    std::vector<Rational> m_p;
    std::vector<Rational> m_q;
};

/// Result of a truncated evaluation.
///
/// `value` is the last non-singular convergent with radius equal to its gap
/// to the previous non-singular one. That radius is a heuristic, not a bound.
struct GcfEvaluation {
    Real value;
    ConvergentSequence convergents;
    unsigned long depth;
    unsigned long last_regular;
    std::size_t singular_count;
    bool rigorous = false;
};

/// Evaluates convergents 0..depth. Only the first `keep` + 1 are stored in
/// the returned sequence; later ones are streamed. Throws
/// SingularConvergentError if every convergent up to `depth` is singular.
GcfEvaluation eval_gcf(const Gcf &cf, unsigned long depth, const PrecisionPolicy &policy, std::size_t keep = 256);

struct ConvergentSample {
    unsigned long depth;
    std::optional<Real> value; // nullopt when q_depth = 0
};

/// Convergent values at each requested depth, in one streaming pass.
std::vector<ConvergentSample> sample_convergents(const Gcf &cf, std::vector<unsigned long> depths, Bits bits);

/// p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1) a_1 ... a_k for all k <= depth.
bool determinant_identity_holds(const Gcf &cf, unsigned long depth);

} // namespace cosprod

#endif
