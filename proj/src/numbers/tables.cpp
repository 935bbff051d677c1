#include <cosprod/numbers/tables.hpp>

#include <mutex>

namespace cosprod
{

BernoulliTable::BernoulliTable() : m_values{Rational(1)} {}

std::size_t BernoulliTable::size() const
{
    std::shared_lock lock(m_mutex);
    return m_values.size();
}

Rational BernoulliTable::at(unsigned long n)
{
    {
        std::shared_lock lock(m_mutex);
        if (n < m_values.size()) {
            return m_values[n];
        }
    }
    std::unique_lock lock(m_mutex);
    while (m_values.size() <= n) {
        const unsigned long m = m_values.size();
        if (m >= 3 && m % 2 == 1) {
            m_values.emplace_back(0);
            continue;
        }
        Rational sum;
        for (unsigned long k = 0; k < m; ++k) {
            if (!m_values[k].is_zero()) {
                sum += Rational(binomial(m + 1, k)) * m_values[k];
            }
        }
        m_values.push_back(-sum / Rational(static_cast<long>(m + 1)));
    }
    return m_values[n];
}

EulerTable::EulerTable() : m_values{Rational(1)} {}

std::size_t EulerTable::size() const
{
    std::shared_lock lock(m_mutex);
    return m_values.size();
}

Rational EulerTable::at(unsigned long n)
{
    {
        std::shared_lock lock(m_mutex);
        if (n < m_values.size()) {
            return m_values[n];
        }
    }
    std::unique_lock lock(m_mutex);
    while (m_values.size() <= n) {
        const unsigned long m = m_values.size();
        if (m % 2 == 0) {
            m_values.emplace_back(0);
            continue;
        }
        Rational sum;
        for (unsigned long i = 0; i < m; ++i) {
            if (!m_values[i].is_zero()) {
                sum += Rational(binomial(m, i)) * m_values[i];
            }
        }
        m_values.push_back(-sum / Rational(2));
    }
    return m_values[n];
}

BernoulliTable &bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

EulerTable &euler_table()
{
    static EulerTable table;
    return table;
}

Rational bernoulli(unsigned long n)
{
    return bernoulli_table().at(n);
}

Rational euler(unsigned long n)
{
    return euler_table().at(n);
}

Rational euler_from_bernoulli(unsigned long n)
{
    Integer two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, n + 1);
    const Rational factor(Integer(-2 * (two_power - 1)), Integer(n + 1));
    return factor * bernoulli(n + 1);
}

} // namespace cosprod
