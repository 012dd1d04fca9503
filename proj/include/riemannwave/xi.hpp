#pragma once

// The completed zeta function Xi(s) = pi^(-s/2) Gamma(s/2) zeta(s), evaluated
// three independent ways, plus the Cauchy kernel that links them.
//
// Points are addressed by (t, delta) with s = 1/2 + delta + i t. The shifted
// argument z = t - i delta turns s into 1/2 + i z, so that
//
//   direct      Xi = 1/(s(s-1)) + int_1^inf (x^(s/2-1) + x^((1-s)/2-1)) theta(x) dx
//   omega form  Xi = 2 int_0^inf cos(z y/2) omega(y) dy - 1/((z - i/2)(z + i/2))
//   Fourier     Xi = 2 int_0^inf cos(z y/2) phi(y) dy          (|delta| < 1/2)
//
// On the critical line |Xi(t, 0)| falls off like exp(-pi t/4); below roughly
// 1e-12 (t ~ 35) binary64 quadrature can no longer resolve its sign.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "riemannwave/errors.hpp"
#include "riemannwave/numerics.hpp"
#include "riemannwave/theta.hpp"
#include "riemannwave/tolerances.hpp"

namespace riemannwave {

using Complex = std::complex<double>;

/// s = 1/2 + delta + i t, addressed by height t and offset delta from the
/// critical line.
struct CriticalPoint
{
    double t = 0.0;
    double delta = 0.0;

    Complex s() const { return {0.5 + delta, t}; }
    double sigma() const { return 0.5 + delta; }
    /// z = t - i delta, so that s = 1/2 + i z.
    Complex z() const { return {t, -delta}; }
};

/// Highest t at which zero location on the critical line is supported.
inline constexpr double kPrecisionWallT = 35.0;
/// The Fourier evaluator refuses |delta| at or beyond this bound.
inline constexpr double kFourierDeltaLimit = 0.49;

template <class T>
struct Estimate
{
    T value{};
    double abs_error = 0.0;
};

/// Sign choice in the exponential kernel exp(+/- i z y / 2).
enum class KernelSign { upper, lower };

namespace detail {

inline double direct_truncation_point(double max_power, double budget)
{
    // |integrand| <= 2 x^p * 1.001 exp(-pi x) for x >= 1.
    const double pi = std::numbers::pi;
    double x = 2.0;
    for (;; x += 0.5) {
        const double growth = std::max(max_power, 0.0);
        const double rate = pi - growth / x;
        if (rate > 1.0 && 2.002 * std::pow(x, max_power) * std::exp(-pi * x) / rate < budget) {
            return x;
        }
    }
}

inline double omega_truncation_point(double delta, double budget)
{
    // |2 cos(z y/2) omega(y)| <= 2.002 exp((1/4 + |delta|/2) y - pi e^y); the
    // tail integral is bounded by that value divided by pi e^y.
    const double pi = std::numbers::pi;
    for (double y = 1.0;; y += 0.25) {
        const double ey = std::exp(y);
        const double log_bound = std::log(2.002) + (0.25 + 0.5 * std::abs(delta)) * y - pi * ey - std::log(pi * ey);
        if (log_bound < std::log(budget)) {
            return y;
        }
    }
}

inline void require_not_kernel_pole(const CriticalPoint &p, const char *who)
{
    if (p.t == 0.0 && std::abs(p.delta) == 0.5) {
        throw DomainError(std::string(who) + ": z = t - i delta = +/- i/2 is a pole of the Cauchy kernel");
    }
}

} // namespace detail

/// Xi(s) from the classical theta-series integral over [1, inf). Valid for
/// every s except the poles s = 0 and s = 1.
inline Estimate<Complex> xi_direct_estimate(const CriticalPoint &p, const Tolerances &tol = {})
{
    const Complex s = p.s();
    if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
        throw DomainError("xi_direct: s = 0 and s = 1 are poles of 1/(s(s-1))");
    }

    const Complex a1 = 0.5 * s - 1.0;
    const Complex a2 = 0.5 * (1.0 - s) - 1.0;
    const double upper = detail::direct_truncation_point(std::max(a1.real(), a2.real()), 0.5 * tol.quad_abs_tol);

    auto integrand = [&](double x) {
        const double lx = std::log(x);
        return (std::exp(a1 * lx) + std::exp(a2 * lx)) * theta(x, tol);
    };
    const auto panels = static_cast<std::size_t>(std::ceil(upper - 1.0));
    const auto q = integrate_interval(integrand, 1.0, upper, tol, panels);
    return {1.0 / (s * (s - 1.0)) + q.value, q.abs_error + 0.5 * tol.quad_abs_tol};
}

inline Complex xi_direct(const CriticalPoint &p, const Tolerances &tol = {})
{
    return xi_direct_estimate(p, tol).value;
}

/// Real-arithmetic form of the direct evaluator on delta = 0, where
/// Xi(t, 0) = -1/(t^2 + 1/4) + 2 int_1^inf x^(-3/4) cos((t/2) ln x) theta(x) dx.
inline Estimate<double> xi_critical_line_estimate(double t, const Tolerances &tol = {})
{
    const double upper = detail::direct_truncation_point(-0.75, 0.5 * tol.quad_abs_tol);
    auto integrand = [&](double x) {
        const double lx = std::log(x);
        return 2.0 * std::exp(-0.75 * lx) * std::cos(0.5 * t * lx) * theta(x, tol);
    };
    const auto panels = static_cast<std::size_t>(std::ceil(upper - 1.0));
    const auto q = integrate_interval(integrand, 1.0, upper, tol, panels);
    return {q.value - 1.0 / (t * t + 0.25), q.abs_error + 0.5 * tol.quad_abs_tol};
}

inline double xi_critical_line(double t, const Tolerances &tol = {})
{
    return xi_critical_line_estimate(t, tol).value;
}

/// Closed form 1/((z - i/2)(z + i/2)) of int_0^inf cos(z y/2) exp(-y/4) dy,
/// an identity inside the strip |delta| < 1/2.
inline Complex cauchy_kernel(const CriticalPoint &p)
{
    detail::require_not_kernel_pole(p, "cauchy_kernel");
    const Complex z = p.z();
    const Complex half_i(0.0, 0.5);
    return 1.0 / ((z - half_i) * (z + half_i));
}

/// Xi from 2 int_0^inf cos(z y/2) omega(y) dy minus the Cauchy kernel.
/// omega decays super-exponentially, so the integral converges for any delta.
inline Estimate<Complex> xi_omega_form_estimate(const CriticalPoint &p, const Tolerances &tol = {})
{
    detail::require_not_kernel_pole(p, "xi_omega_form");
    const Complex half_z = 0.5 * p.z();
    const double upper = detail::omega_truncation_point(p.delta, 0.5 * tol.quad_abs_tol);
    auto integrand = [&](double y) { return 2.0 * std::cos(half_z * y) * omega(y, tol); };
    const auto panels = static_cast<std::size_t>(std::ceil(2.0 * upper));
    const auto q = integrate_interval(integrand, 0.0, upper, tol, panels);
    return {q.value - cauchy_kernel(p), q.abs_error + 0.5 * tol.quad_abs_tol};
}

inline Complex xi_omega_form(const CriticalPoint &p, const Tolerances &tol = {})
{
    return xi_omega_form_estimate(p, tol).value;
}

namespace detail {

inline void require_fourier_strip(const CriticalPoint &p)
{
    if (!(std::abs(p.delta) < kFourierDeltaLimit)) {
        throw UnsupportedRangeError("xi_fourier: |delta| >= 0.49 leaves the Fourier strip; use xi_direct");
    }
}

inline double fourier_decay_rate(double delta)
{
    return 0.25 - 0.5 * std::abs(delta);
}

/// exp(w) phi(y), with phi's exp(-y/4) folded into the exponent. Near the strip
/// edge exp(w) alone overflows long before the product leaves range.
inline Complex exp_times_phi(Complex w, double y, const Tolerances &tol)
{
    Complex value = -0.5 * std::exp(w - 0.25 * y);
    const double om = omega(y, tol);
    if (om != 0.0) {
        value += std::exp(w) * om;
    }
    return value;
}

} // namespace detail

/// Xi as the cosine transform 2 int_0^inf cos(z y/2) phi(y) dy. The integrand
/// envelope is exp((|delta|/2 - 1/4) y), so |delta| is limited to 0.49.
inline Estimate<Complex> xi_fourier_estimate(const CriticalPoint &p, const Tolerances &tol = {})
{
    detail::require_fourier_strip(p);
    const Complex i_half_z = Complex(0.0, 0.5) * p.z();
    // 2 cos(w) phi = (e^(iw) + e^(-iw)) phi.
    auto integrand = [&](double y) {
        return detail::exp_times_phi(i_half_z * y, y, tol) + detail::exp_times_phi(-i_half_z * y, y, tol);
    };
    const auto q = integrate_decaying(integrand, 0.0, detail::fourier_decay_rate(p.delta), tol);
    return {q.value, q.abs_error};
}

inline Complex xi_fourier(const CriticalPoint &p, const Tolerances &tol = {})
{
    return xi_fourier_estimate(p, tol).value;
}

/// Xi as the full-line transform int exp(+/- i z y/2) phi(|y|) dy, with the two
/// half-lines integrated separately. Equal to xi_fourier for either sign.
inline Complex xi_fourier_exponential(const CriticalPoint &p, KernelSign sign, const Tolerances &tol = {})
{
    detail::require_fourier_strip(p);
    const Complex i_half_z = Complex(0.0, sign == KernelSign::upper ? 0.5 : -0.5) * p.z();
    const double rate = detail::fourier_decay_rate(p.delta);
    auto positive_side = [&](double y) { return detail::exp_times_phi(i_half_z * y, y, tol); };
    auto negative_side = [&](double y) { return detail::exp_times_phi(-i_half_z * y, y, tol); };
    const auto right = integrate_decaying(positive_side, 0.0, rate, tol, 0.5);
    const auto left = integrate_decaying(negative_side, 0.0, rate, tol, 0.5);
    return right.value + left.value;
}

/// zeta(s) = pi^(s/2) Xi(s) / Gamma(s/2), with Xi from the direct evaluator.
inline Complex zeta_from_xi(const CriticalPoint &p, const Tolerances &tol = {})
{
    const Complex half_s = 0.5 * p.s();
    if (half_s.imag() == 0.0 && half_s.real() <= 0.0 && half_s.real() == std::floor(half_s.real())) {
        throw DomainError("zeta_from_xi: s/2 is a pole of Gamma");
    }
    const Complex xi = xi_direct(p, tol);
    return std::exp(half_s * std::log(std::numbers::pi) - log_gamma_complex(half_s)) * xi;
}

} // namespace riemannwave
