#pragma once

// The Riemann wave function
//
//   R(x) = exp(-|x|) - 2 sum_{n>=1} exp(|x| - pi n^2 exp(4|x|)),
//
// which equals -2 phi(4|x|), together with its analytic derivatives, the
// potential u_R it is the ground state of (energy -1), and the regularity
// checks: normalizability, continuity of R and R' at the kink x = 0.
//
// Write R(x) = exp(-|x|) D(|x|) with D(u) = 1 - 2 sum exp(2u - pi n^2 e^(4u)).
// Then u_R = (D'' - 2D')/D, which is the closed form evaluated below.

#include <cmath>
#include <numbers>

#include "riemannwave/errors.hpp"
#include "riemannwave/numerics.hpp"
#include "riemannwave/theta.hpp"
#include "riemannwave/tolerances.hpp"

namespace riemannwave {

/// Eigenvalue of -d^2/dx^2 + u_R for the state R.
inline constexpr double kGroundStateEnergy = -1.0;
/// Schrodinger residuals are only evaluated for |x| at or above this.
inline constexpr double kKinkExclusion = 0.01;

namespace detail {

inline constexpr int kWaveSeriesCap = 16;

/// Term-wise sums for x >= 0 with g_n(x) = x - pi n^2 exp(4x):
///   s0 = sum e^g,  s1 = sum g' e^g,  s2 = sum (g'^2 + g'') e^g.
struct WaveSums
{
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

inline WaveSums wave_sums(double x, const Tolerances &tol)
{
    const double pi = std::numbers::pi;
    const double e4 = std::exp(4.0 * x);
    WaveSums sums;
    for (int n = 1; n <= kWaveSeriesCap; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const double g = x - pi * n2 * e4;
        const double term = std::exp(g);
        if (term == 0.0) {
            break;
        }
        const double g1 = 1.0 - 4.0 * pi * n2 * e4;
        const double g2 = -16.0 * pi * n2 * e4;
        sums.s0 += term;
        sums.s1 += g1 * term;
        sums.s2 += (g1 * g1 + g2) * term;
        // Successive terms shrink by at least exp(-3 pi e^(4x)) times a
        // polynomial factor; below series_tol relative to exp(-x) the tail is
        // negligible.
        if (std::abs((g1 * g1 + g2) * term) < tol.series_tol * 1e-3 * std::exp(-x)) {
            break;
        }
    }
    return sums;
}

/// r+(x) = exp(-x) - 2 sum exp(x - pi n^2 exp(4x)) for x >= 0.
inline double right_branch(double x, const Tolerances &tol)
{
    return std::exp(-x) - 2.0 * wave_sums(x, tol).s0;
}

/// D(u) = 1 - 2 sum exp(2u - pi n^2 exp(4u)) for u >= 0, with its sum of
/// derivative terms for u_R's numerator.
struct PotentialSums
{
    double denominator = 1.0;
    double numerator = 0.0; // sum n^2 (3 - 2 pi n^2 e^(4u)) exp(6u - pi n^2 e^(4u))
};

inline PotentialSums potential_sums(double u, const Tolerances &tol)
{
    const double pi = std::numbers::pi;
    const double e4 = std::exp(4.0 * u);
    PotentialSums sums;
    double denominator_series = 0.0;
    for (int n = 1; n <= kWaveSeriesCap; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const double base = -pi * n2 * e4;
        const double den_term = std::exp(2.0 * u + base);
        const double num_term = n2 * (3.0 - 2.0 * pi * n2 * e4) * std::exp(6.0 * u + base);
        if (den_term == 0.0 && num_term == 0.0) {
            break;
        }
        denominator_series += den_term;
        sums.numerator += num_term;
        if (std::abs(num_term) < tol.series_tol * 1e-3 * std::abs(sums.numerator) &&
            den_term < tol.series_tol * 1e-3) {
            break;
        }
    }
    sums.denominator = 1.0 - 2.0 * denominator_series;
    return sums;
}

} // namespace detail

/// R(x): r-(x) for x < 0, r+(x) for x > 0, and their mean at 0. Even,
/// positive, bounded by 1.
inline double riemann_wave(double x, const Tolerances &tol = {})
{
    // r-(x) = r+(-x), so both branches and their mean at 0 reduce to r+(|x|).
    return detail::right_branch(std::abs(x), tol);
}

/// First or second derivative of R by term-wise differentiation.
///
/// Order 1 is odd in x and returns 0 at x = 0 (the mean of the one-sided
/// limits, which are equal and opposite). Order 2 is even; at x = 0 the
/// one-sided value is returned.
inline double riemann_wave_deriv(double x, int order, const Tolerances &tol = {})
{
    if (order != 1 && order != 2) {
        throw DomainError("riemann_wave_deriv: order must be 1 or 2");
    }
    const double u = std::abs(x);
    const auto sums = detail::wave_sums(u, tol);
    const double decay = std::exp(-u);
    if (order == 1) {
        if (x == 0.0) {
            return 0.0;
        }
        const double right = -decay - 2.0 * sums.s1;
        return x > 0.0 ? right : -right;
    }
    return decay - 2.0 * sums.s2;
}

/// u_R(x) = 16 pi sum n^2 (3 - 2 pi n^2 e^(4|x|)) exp(6|x| - pi n^2 e^(4|x|))
///          / (1 - 2 sum exp(2|x| - pi n^2 e^(4|x|))).
inline double potential(double x, const Tolerances &tol = {})
{
    const auto sums = detail::potential_sums(std::abs(x), tol);
    if (!(sums.denominator >= 0.5)) {
        throw ConsistencyError("potential: denominator fell below 0.5, which the series bounds rule out");
    }
    return 16.0 * std::numbers::pi * sums.numerator / sums.denominator;
}

/// -R'' + u_R R - E R with E = -1; vanishes identically away from the kink.
inline double schrodinger_residual(double x, const Tolerances &tol = {})
{
    if (!(std::abs(x) >= kKinkExclusion)) {
        throw DomainError("schrodinger_residual: |x| < 0.01 is excluded around the kink at 0");
    }
    const double r = riemann_wave(x, tol);
    return -riemann_wave_deriv(x, 2, tol) + potential(x, tol) * r - kGroundStateEnergy * r;
}

/// Integral of R^2 over the real line, as twice the half-line integral.
inline QuadratureResult<double> norm_squared(const Tolerances &tol = {})
{
    auto density = [&](double x) {
        const double r = detail::right_branch(x, tol);
        return r * r;
    };
    auto half = integrate_decaying(density, 0.0, 2.0, tol, 1.0, 0.5);
    half.value *= 2.0;
    half.abs_error *= 2.0;
    return half;
}

/// Regularity facts about R gathered in one place.
struct RegularityReport
{
    double value_at_zero;            ///< R(0)
    double theta_series_limit;       ///< 1 - 2 theta(1), the limit of R at 0
    double right_derivative_at_zero; ///< R'(0+), zero by 4 theta'(1) + theta(1) = -1/2
    double theta_identity;           ///< 4 theta'(1) + theta(1)
    QuadratureResult<double> norm;   ///< integral of R^2, below the bound 1
};

inline RegularityReport regularity_report(const Tolerances &tol = {})
{
    const auto sums = detail::wave_sums(0.0, tol);
    return {
        riemann_wave(0.0, tol),
        1.0 - 2.0 * theta(1.0, tol),
        -1.0 - 2.0 * sums.s1,
        4.0 * theta_prime(1.0, tol) + theta(1.0, tol),
        norm_squared(tol),
    };
}

} // namespace riemannwave
