#ifndef COSPROD_PRECISION_ERRORS_HPP
#define COSPROD_PRECISION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cosprod
{

/// Argument outside the mathematical domain of a function (log of a
/// non-positive interval, Hurwitz parameter outside (0, 1], ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// The argument interval contains (or cannot be separated from) a pole.
class PoleStraddleError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// A power series was requested outside its disc of convergence.
class ConvergenceDomainError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Jet division by a jet whose constant term may vanish.
class JetDivisionError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Every convergent of a continued fraction up to the requested depth had q_k = 0.
class SingularConvergentError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line or identity-filter input.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace cosprod

#endif
