#pragma once

#include <stdexcept>
#include <string>

namespace riemannwave {

/// Argument outside the mathematical domain of an operation (poles, negative
/// arguments, malformed brackets, invalid grids).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Request lies in a region the binary64 evaluators refuse to enter: the
/// precision wall on the critical line, or the edge of the Fourier strip.
class UnsupportedRangeError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

/// Adaptive quadrature exhausted its subdivision budget.
class ConvergenceError : public std::runtime_error
{
public:
    ConvergenceError(const std::string &what, double best_estimate, double achieved_error)
        : std::runtime_error(what), best_estimate_(best_estimate), achieved_error_(achieved_error)
    {
    }

    double best_estimate() const noexcept { return best_estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

/// A function sampled during bracketing returned NaN or infinity.
class NonFiniteError : public std::runtime_error
{
public:
    NonFiniteError(const std::string &what, double abscissa)
        : std::runtime_error(what), abscissa_(abscissa)
    {
    }

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// An internal invariant that should be provably impossible to violate.
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace riemannwave
