#pragma once

// Particle in an infinitely deep well of width a centred on 0.
//
// psi_n(x) = sqrt(2/a) cos(n pi x/a) for odd n, sqrt(2/a) sin(n pi x/a) for
// even n, zero outside [-a/2, a/2]. Its spectral density at K = k - i lambda is
//
//   rho_n = 4 pi n^2 [c^2(ka/2) cosh^2(lambda a/2) + s^2(ka/2) sinh^2(lambda a/2)]
//           / (a^3 [(k^2 - lambda^2 - pi^2 n^2/a^2)^2 + 4 lambda^2 k^2])
//
// with (c, s) = (cos, sin) for odd n and (sin, cos) for even n. On lambda = 0
// it has a removable point at k = +/- n pi/a with value a/(4 pi).

#include <cmath>
#include <numbers>
#include <vector>

#include "riemannwave/errors.hpp"
#include "riemannwave/spectral.hpp"

namespace riemannwave {

struct WellState
{
    int n = 1;
    double a = 1.0;

    void validate() const
    {
        if (n < 1) {
            throw DomainError("WellState: quantum number n must be >= 1");
        }
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw DomainError("WellState: width a must be positive");
        }
    }

    bool odd() const { return n % 2 == 1; }
    /// n pi / a, the wave number of the standing wave.
    double wave_number() const { return n * std::numbers::pi / a; }
};

/// Within this distance of n pi (in units of k a) the lambda = 0 branch is
/// evaluated in its cancellation-free form.
inline constexpr double kRemovablePointWindow = 1e-6;

namespace detail {

/// cos(pi u) and sin(pi u) with exact zeros at the integers and half-integers.
inline double cos_pi(double u)
{
    const double r = std::remainder(u, 2.0); // in [-1, 1]
    const double pi = std::numbers::pi;
    const double a = std::abs(r);
    if (a == 0.5) {
        return 0.0;
    }
    if (a <= 0.25) {
        return std::cos(pi * r);
    }
    if (a <= 0.75) {
        return std::sin(pi * (0.5 - a));
    }
    return -std::cos(pi * (1.0 - a));
}

inline double sin_pi(double u)
{
    const double r = std::remainder(u, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0) {
        return 0.0;
    }
    return cos_pi(0.5 - r);
}

/// sin(u)/u.
inline double sinc(double u)
{
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

/// Core of the closed form; `phase_units` is k a / (2 pi), so the trigonometric
/// factors are cos/sin(pi * phase_units).
inline double well_density(const WellState &s, double k, double lambda, double phase_units)
{
    const double pi = std::numbers::pi;
    const double a = s.a;
    const double n2 = static_cast<double>(s.n) * s.n;
    const double q = s.wave_number();

    if (lambda == 0.0) {
        const double distance = std::abs(std::abs(k) * a - s.n * pi);
        if (distance < kRemovablePointWindow) {
            // With e = |k| - q the quotient is (pi n^2/a) sinc^2(e a/2) / (2q + e)^2.
            const double e = std::abs(k) - q;
            const double sc = sinc(0.5 * e * a);
            const double d = 2.0 * q + e;
            return pi * n2 / a * sc * sc / (d * d);
        }
        const double c = s.odd() ? cos_pi(phase_units) : sin_pi(phase_units);
        const double gap = k * k - q * q;
        return 4.0 * pi * n2 * c * c / (a * a * a * gap * gap);
    }

    const double c = s.odd() ? cos_pi(phase_units) : sin_pi(phase_units);
    const double sn = s.odd() ? sin_pi(phase_units) : cos_pi(phase_units);
    const double gap = k * k - lambda * lambda - q * q;
    const double denominator = a * a * a * (gap * gap + 4.0 * lambda * lambda * k * k);
    const double w = 0.5 * lambda * a;

    if (std::abs(lambda * a) > 30.0) {
        // c^2 cosh^2 w + s^2 sinh^2 w = sinh^2 w + c^2; take logs so cosh^2 never
        // overflows on its own.
        const double aw = std::abs(w);
        const double decay = std::exp(-2.0 * aw);
        const double log_numerator =
            2.0 * aw - 2.0 * std::numbers::ln2 + std::log((1.0 - decay) * (1.0 - decay) + 4.0 * c * c * decay);
        return std::exp(std::log(4.0 * pi * n2) + log_numerator - std::log(denominator));
    }
    const double ch = std::cosh(w);
    const double sh = std::sinh(w);
    return 4.0 * pi * n2 * (c * c * ch * ch + sn * sn * sh * sh) / denominator;
}

} // namespace detail

/// psi_n(x); zero outside the well.
inline double well_wavefunction(const WellState &s, double x)
{
    s.validate();
    if (std::abs(x) > 0.5 * s.a) {
        return 0.0;
    }
    const double amplitude = std::sqrt(2.0 / s.a);
    const double u = s.n * x / s.a;
    return amplitude * (s.odd() ? detail::cos_pi(u) : detail::sin_pi(u));
}

/// The closed-form rho_n(k, lambda). Never negative.
inline double well_spectral_closed(const WellState &s, const WaveVector &kv)
{
    s.validate();
    return detail::well_density(s, kv.k, kv.lambda, kv.k * s.a / (2.0 * std::numbers::pi));
}

/// rho_n at k = multiple * pi / a. Trigonometric factors are taken at the exact
/// phase multiple * pi / 2, so the forbidden states come out as exact zeros.
inline double well_spectral_at_multiple(const WellState &s, double multiple, double lambda)
{
    s.validate();
    const double k = multiple * std::numbers::pi / s.a;
    return detail::well_density(s, k, lambda, 0.5 * multiple);
}

/// psi_n as an analytic state for the generic transform.
inline AnalyticState well_state(const WellState &s)
{
    s.validate();
    AnalyticState state;
    state.psi = [s](double x) { return Complex(well_wavefunction(s, x), 0.0); };
    state.support_lo = -0.5 * s.a;
    state.support_hi = 0.5 * s.a;
    state.breakpoints = {0.0};
    return state;
}

/// k = m pi / a for m <= m_max, m != n, m of the same parity as n: the real
/// wave vectors where rho_n(k, 0) vanishes.
inline std::vector<double> well_forbidden_states(const WellState &s, int m_max)
{
    s.validate();
    if (m_max < 1) {
        throw DomainError("well_forbidden_states: m_max must be >= 1");
    }
    std::vector<double> ks;
    for (int m = 1; m <= m_max; ++m) {
        if (m != s.n && (m - s.n) % 2 == 0) {
            ks.push_back(m * std::numbers::pi / s.a);
        }
    }
    return ks;
}

/// rho_n(m pi/a, 0) at a multiple of pi/a with parity opposite to n.
struct OppositeParityValue
{
    int m;
    double rho;
};

/// Values of rho_n(m pi/a, 0) for m <= m_max with m - n odd. These are not
/// zero: cos^2 or sin^2 of (m pi/2) equals 1 there, so the closed form does not
/// vanish at every m != n.
inline std::vector<OppositeParityValue> well_opposite_parity_values(const WellState &s, int m_max)
{
    s.validate();
    if (m_max < 1) {
        throw DomainError("well_opposite_parity_values: m_max must be >= 1");
    }
    std::vector<OppositeParityValue> values;
    for (int m = 1; m <= m_max; ++m) {
        if ((m - s.n) % 2 != 0) {
            values.push_back({m, well_spectral_at_multiple(s, m, 0.0)});
        }
    }
    return values;
}

} // namespace riemannwave
