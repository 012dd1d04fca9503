#pragma once

// The autocorrelation
//
//   tau(t) = [1 - 2 sum exp(2|t|/t0 - pi n^2 exp(4|t|/t0))] / [1 - 2 sum exp(-pi n^2)]
//            * exp(-|t|/t0),
//
// which factors as R(|t|/t0) / R(0), and a Bochner-style probe of its
// spectrum S(omega) = int tau(t) exp(-i omega t) dt. Since
// S(omega) = -t0 Xi(omega t0/2, 0) / (2 R(0)), S changes sign at every zeta
// zero; the probe reports those sign changes rather than asserting S >= 0.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "riemannwave/errors.hpp"
#include "riemannwave/numerics.hpp"
#include "riemannwave/tolerances.hpp"
#include "riemannwave/wavefunction.hpp"
#include "riemannwave/xi.hpp"

namespace riemannwave {

struct CorrelationParams
{
    double t0 = 1.0;

    void validate() const
    {
        if (!(t0 > 0.0) || !std::isfinite(t0)) {
            throw DomainError("CorrelationParams: t0 must be positive");
        }
    }
};

namespace detail {

/// 1 - 2 sum exp(2u - pi n^2 exp(4u)) for u >= 0.
inline double correlation_numerator(double u, const Tolerances &tol)
{
    const double pi = std::numbers::pi;
    const double e4 = std::exp(4.0 * u);
    double series = 0.0;
    for (int n = 1; n <= kWaveSeriesCap; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const double term = std::exp(2.0 * u - pi * n2 * e4);
        series += term;
        if (term < tol.series_tol * 1e-3) {
            break;
        }
    }
    return 1.0 - 2.0 * series;
}

} // namespace detail

/// tau(t); even, tau(0) = 1.
inline double autocorrelation(double t, const CorrelationParams &p, const Tolerances &tol = {})
{
    p.validate();
    const double u = std::abs(t) / p.t0;
    return detail::correlation_numerator(u, tol) / detail::correlation_numerator(0.0, tol) * std::exp(-u);
}

struct SpectrumPoint
{
    double omega;
    double direct;  ///< 2 int_0^inf tau(t) cos(omega t) dt by quadrature
    double closed;  ///< -t0 Xi(omega t0/2, 0) / (2 R(0))
    bool negative;  ///< closed < 0
};

/// S(omega) = -t0 Xi(omega t0 / 2, 0) / (2 R(0)).
inline double autocorrelation_spectrum_closed(double omega, const CorrelationParams &p, const Tolerances &tol = {})
{
    p.validate();
    return -p.t0 * xi_critical_line(0.5 * omega * p.t0, tol) / (2.0 * riemann_wave(0.0, tol));
}

/// S(omega) by direct quadrature of the cosine transform of tau.
inline double autocorrelation_spectrum_direct(double omega, const CorrelationParams &p, const Tolerances &tol = {})
{
    p.validate();
    auto integrand = [&](double t) { return 2.0 * autocorrelation(t, p, tol) * std::cos(omega * t); };
    // |tau(t)| <= exp(-t/t0) / R(0) < 1.1 exp(-t/t0).
    const double panel = std::min(p.t0, 2.0 / (1.0 + std::abs(omega)));
    return integrate_decaying(integrand, 0.0, 1.0 / p.t0, tol, 2.2, panel).value;
}

/// Both spectrum routes on a grid, flagging negative values.
inline std::vector<SpectrumPoint> autocorrelation_spectrum(const std::vector<double> &omega_grid,
                                                           const CorrelationParams &p, const Tolerances &tol = {})
{
    p.validate();
    std::vector<SpectrumPoint> points;
    points.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        if (!std::isfinite(omega)) {
            throw DomainError("autocorrelation_spectrum: omega grid must be finite");
        }
        const double closed = autocorrelation_spectrum_closed(omega, p, tol);
        points.push_back({omega, autocorrelation_spectrum_direct(omega, p, tol), closed, closed < 0.0});
    }
    return points;
}

/// Frequencies in [omega_lo, omega_hi] where S changes sign, bracketed on a
/// grid of spacing `step` and refined by bisection to root_tol. Ascending.
inline std::vector<double> spectrum_sign_changes(double omega_lo, double omega_hi, double step,
                                                 const CorrelationParams &p, const Tolerances &tol = {})
{
    p.validate();
    if (!(0.5 * std::max(std::abs(omega_lo), std::abs(omega_hi)) * p.t0 <= kPrecisionWallT)) {
        throw UnsupportedRangeError("spectrum_sign_changes: omega t0 / 2 beyond 35 is past the precision wall");
    }
    auto spectrum = [&](double omega) { return autocorrelation_spectrum_closed(omega, p, tol); };
    std::vector<double> flips;
    for (const auto &bracket : find_sign_changes(spectrum, omega_lo, omega_hi, step)) {
        flips.push_back(bisect(spectrum, bracket, tol));
    }
    return flips;
}

} // namespace riemannwave
