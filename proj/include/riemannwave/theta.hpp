#pragma once

// The theta series theta(x) = sum_{n>=1} exp(-pi n^2 x), its derivative, and
// the two kernels built from it:
//
//   omega(y) = exp(y/4) theta(exp(y))
//   phi(y)   = -1/2 [exp(-y/4) - 2 omega(y)]
//
// Terms whose exponent falls below the binary64 range evaluate to exactly 0.

#include <cmath>
#include <numbers>

#include "riemannwave/errors.hpp"
#include "riemannwave/tolerances.hpp"

namespace riemannwave {

namespace detail {

inline constexpr int kThetaTermCap = 64;

/// Geometric bound on sum_{n>=m} exp(-pi n^2 x).
inline double theta_tail_bound(int m, double x)
{
    const double pi = std::numbers::pi;
    const double md = m;
    return std::exp(-pi * md * md * x) / (1.0 - std::exp(-pi * (2.0 * md + 1.0) * x));
}

/// sum_{n>=1} n^(2p) exp(-pi n^2 x), truncated once the tail from the next
/// index is below series_tol * max(partial, series_tol). The n^(2p) weight is
/// folded into the bound by the ratio ((m+1)/m)^(2p) <= 4^p.
inline double theta_moment(int power, double x, const Tolerances &tol)
{
    const double pi = std::numbers::pi;
    const double weight_slack = std::pow(4.0, power);
    double sum = 0.0;
    for (int n = 1; n <= kThetaTermCap; ++n) {
        const double nd = n;
        sum += std::pow(nd * nd, power) * std::exp(-pi * nd * nd * x);
        const int next = n + 1;
        const double nextd = next;
        const double tail = weight_slack * std::pow(nextd * nextd, power) * theta_tail_bound(next, x);
        if (tail < tol.series_tol * std::max(sum, tol.series_tol)) {
            break;
        }
    }
    return sum;
}

} // namespace detail

/// theta(x) = sum_{n>=1} exp(-pi n^2 x) for x > 0.
///
/// The 64-term cap limits full binary64 accuracy to x >= 0.01; every internal
/// caller has x >= 1.
inline double theta(double x, const Tolerances &tol = {})
{
    if (!(x > 0.0)) {
        throw DomainError("theta: argument must be positive");
    }
    const double pi = std::numbers::pi;
    double sum = 0.0;
    for (int n = 1; n <= detail::kThetaTermCap; ++n) {
        const double nd = n;
        sum += std::exp(-pi * nd * nd * x);
        if (detail::theta_tail_bound(n + 1, x) < tol.series_tol * std::max(sum, tol.series_tol)) {
            break;
        }
    }
    return sum;
}

/// theta'(x) = -pi sum n^2 exp(-pi n^2 x); always negative.
inline double theta_prime(double x, const Tolerances &tol = {})
{
    if (!(x > 0.0)) {
        throw DomainError("theta_prime: argument must be positive");
    }
    return -std::numbers::pi * detail::theta_moment(1, x, tol);
}

/// omega(y) = exp(y/4) theta(exp(y)) for y >= 0.
inline double omega(double y, const Tolerances &tol = {})
{
    if (!(y >= 0.0)) {
        throw DomainError("omega: argument must be nonnegative");
    }
    // theta underflows to 0 long before exp(y/4) overflows; keep 0 * inf out.
    const double th = theta(std::exp(y), tol);
    return th == 0.0 ? 0.0 : std::exp(0.25 * y) * th;
}

/// phi(y) = -exp(-y/4)/2 + omega(y). Negative on [0, inf) and bounded by
/// exp(-y/4)/2 in magnitude.
inline double phi(double y, const Tolerances &tol = {})
{
    if (!(y >= 0.0)) {
        throw DomainError("phi: argument must be nonnegative");
    }
    return -0.5 * std::exp(-0.25 * y) + omega(y, tol);
}

} // namespace riemannwave
