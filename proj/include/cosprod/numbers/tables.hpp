#ifndef COSPROD_NUMBERS_TABLES_HPP
#define COSPROD_NUMBERS_TABLES_HPP

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include <cosprod/precision/rational.hpp>

namespace cosprod
{

/// Append-only memo of Bernoulli numbers B_n, the coefficients of z / (e^z - 1).
///
/// Entries are filled by sum_{k=0}^{n} C(n+1, k) B_k = 0. Readers of an
/// already computed prefix take a shared lock; growth takes an exclusive one.
class BernoulliTable
{
public:
    BernoulliTable();

    Rational at(unsigned long n);
    std::size_t size() const;

private:
    mutable std::shared_mutex m_mutex;
    std::vector<Rational> m_values;
};

/// Append-only memo of the numbers E_n defined by 2 / (e^z + 1) = sum E_n z^n / n!.
///
/// Entries are filled by 2 E_n = -sum_{i<n} C(n, i) E_i.
class EulerTable
{
public:
    EulerTable();

    Rational at(unsigned long n);
    std::size_t size() const;

private:
    mutable std::shared_mutex m_mutex;
    std::vector<Rational> m_values;
};

/// Process-wide tables used by bernoulli() and euler().
BernoulliTable &bernoulli_table();
EulerTable &euler_table();

Rational bernoulli(unsigned long n);
Rational euler(unsigned long n);

/// -2 (2^(n+1) - 1) / (n + 1) * B_{n+1}.
Rational euler_from_bernoulli(unsigned long n);

} // namespace cosprod

#endif
