#pragma once

// Spectral densities over complex wave vectors K = k - i lambda.
//
// For a state psi, A(K) = (2 pi)^(-1/2) int psi(x) exp(-i K x) dx and
// rho(K) = |A(K)|^2. For the Riemann wave function R the amplitude is a
// rescaled Xi: with t = k/2 and delta = lambda/2,
//
//   A_R(K) = -Xi(t, delta) / (2 sqrt(2 pi)),
//
// so rho_R vanishes exactly at K_n = 2 (t - i delta)_n for the zeta zeros.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "riemannwave/errors.hpp"
#include "riemannwave/numerics.hpp"
#include "riemannwave/tolerances.hpp"
#include "riemannwave/wavefunction.hpp"
#include "riemannwave/xi.hpp"

namespace riemannwave {

/// K = k - i lambda.
struct WaveVector
{
    double k = 0.0;
    double lambda = 0.0;

    Complex value() const { return {k, -lambda}; }
    CriticalPoint critical_point() const { return {0.5 * k, 0.5 * lambda}; }
    static WaveVector from(const CriticalPoint &p) { return {2.0 * p.t, 2.0 * p.delta}; }
};

/// Tabulated wave function; psi is taken as zero outside [xs.front(), xs.back()].
struct SampledWave
{
    std::vector<double> xs;
    std::vector<Complex> values;

    void validate() const
    {
        if (xs.size() != values.size()) {
            throw DomainError("SampledWave: abscissae and values differ in length");
        }
        if (xs.size() < 3) {
            throw DomainError("SampledWave: at least 3 samples are required");
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!std::isfinite(xs[i]) || !std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
                throw DomainError("SampledWave: non-finite sample");
            }
            if (i > 0 && !(xs[i] > xs[i - 1])) {
                throw DomainError("SampledWave: abscissae must be strictly increasing");
            }
        }
    }
};

/// A wave function given in closed form.
///
/// On an unbounded side |psi(x)| must stay below envelope * exp(-decay_rate |x|).
/// Breakpoints mark kinks or support edges where the integral is split.
struct AnalyticState
{
    std::function<Complex(double)> psi;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    double decay_rate = 0.0;
    double envelope = 1.0;
    std::vector<double> breakpoints;
};

/// Beyond |lambda| * |x| = 700 the kernel exp(lambda x) overflows binary64.
inline constexpr double kKernelGrowthLimit = 700.0;
/// riemann_amplitude switches from the Fourier to the direct Xi route here.
inline constexpr double kFourierLambdaLimit = 2.0 * kFourierDeltaLimit;
/// Highest k accepted by strip scans (k = 2t at the precision wall).
inline constexpr double kScanWallK = 2.0 * kPrecisionWallT;
/// A scan point is a counterexample candidate once |A_R| is within this
/// factor of its own quadrature error estimate.
inline constexpr double kCandidateNoiseFactor = 10.0;

namespace detail {

inline double inv_sqrt_two_pi()
{
    return 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

inline void require_kernel_growth(double lambda, double reach, const char *who)
{
    if (!(std::abs(lambda) * reach < kKernelGrowthLimit)) {
        throw DomainError(std::string(who) + ": |lambda| * max|x| must stay below 700");
    }
}

} // namespace detail

/// A_R(K) = -Xi(k/2, lambda/2) / (2 sqrt(2 pi)), with the quadrature error of
/// the Xi evaluation carried along. Uses the Fourier route for
/// |lambda| < 0.98 and the direct route otherwise.
inline Estimate<Complex> riemann_amplitude_estimate(const WaveVector &kv, const Tolerances &tol = {})
{
    const CriticalPoint p = kv.critical_point();
    const auto xi = std::abs(kv.lambda) < kFourierLambdaLimit ? xi_fourier_estimate(p, tol)
                                                              : xi_direct_estimate(p, tol);
    const double scale = 0.5 * detail::inv_sqrt_two_pi();
    return {-scale * xi.value, scale * xi.abs_error};
}

inline Complex riemann_amplitude(const WaveVector &kv, const Tolerances &tol = {})
{
    return riemann_amplitude_estimate(kv, tol).value;
}

/// rho_R(K) = |A_R(K)|^2.
inline double riemann_spectral_density(const WaveVector &kv, const Tolerances &tol = {})
{
    return std::norm(riemann_amplitude(kv, tol));
}

/// (2 pi)^(-1/2) int psi(x) exp(-i K x) dx over the sample support. Pairs of
/// equal-width intervals use Simpson's rule, anything else the trapezoid rule.
inline Complex amplitude_of(const SampledWave &wave, const WaveVector &kv)
{
    wave.validate();
    const double reach = std::max(std::abs(wave.xs.front()), std::abs(wave.xs.back()));
    detail::require_kernel_growth(kv.lambda, reach, "spectral_density_of");

    const Complex minus_i_k = Complex(0.0, -1.0) * kv.value();
    auto integrand = [&](std::size_t i) { return wave.values[i] * std::exp(minus_i_k * wave.xs[i]); };

    const std::size_t n = wave.xs.size();
    Complex sum = 0.0;
    std::size_t i = 0;
    while (i + 2 < n) {
        const double h1 = wave.xs[i + 1] - wave.xs[i];
        const double h2 = wave.xs[i + 2] - wave.xs[i + 1];
        if (std::abs(h1 - h2) <= 1e-9 * std::max(h1, h2)) {
            sum += (h1 + h2) / 6.0 * (integrand(i) + 4.0 * integrand(i + 1) + integrand(i + 2));
            i += 2;
        } else {
            sum += 0.5 * h1 * (integrand(i) + integrand(i + 1));
            i += 1;
        }
    }
    if (i + 1 < n) {
        sum += 0.5 * (wave.xs[i + 1] - wave.xs[i]) * (integrand(i) + integrand(i + 1));
    }
    return detail::inv_sqrt_two_pi() * sum;
}

/// (2 pi)^(-1/2) int psi(x) exp(-i K x) dx for a closed-form state, by
/// adaptive quadrature between breakpoints and semi-infinite quadrature on
/// unbounded sides.
inline Complex amplitude_of(const AnalyticState &state, const WaveVector &kv, const Tolerances &tol = {})
{
    if (!state.psi || !(state.support_lo < state.support_hi)) {
        throw DomainError("spectral_density_of: analytic state needs a function and a non-empty support");
    }
    const bool open_left = std::isinf(state.support_lo);
    const bool open_right = std::isinf(state.support_hi);
    if (!open_left && !open_right) {
        detail::require_kernel_growth(kv.lambda, std::max(std::abs(state.support_lo), std::abs(state.support_hi)),
                                      "spectral_density_of");
    }

    std::vector<double> cuts;
    for (double b : state.breakpoints) {
        if (b > state.support_lo && b < state.support_hi) {
            cuts.push_back(b);
        }
    }
    if ((open_left || open_right) && state.support_lo < 0.0 && state.support_hi > 0.0) {
        cuts.push_back(0.0);
    }
    if (!open_left) {
        cuts.push_back(state.support_lo);
    }
    if (!open_right) {
        cuts.push_back(state.support_hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const Complex minus_i_k = Complex(0.0, -1.0) * kv.value();
    auto integrand = [&](double x) { return state.psi(x) * std::exp(minus_i_k * x); };

    Complex sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double length = cuts[i + 1] - cuts[i];
        const auto panels = static_cast<std::size_t>(std::ceil(length * (1.0 + std::abs(kv.k)) / 2.0));
        sum += integrate_interval(integrand, cuts[i], cuts[i + 1], tol, panels).value;
    }

    if (open_left || open_right) {
        const double rate = state.decay_rate - std::abs(kv.lambda);
        if (!(rate > 0.0)) {
            throw DomainError("spectral_density_of: |lambda| must be below the state's decay rate");
        }
        // Periods of the kernel per unit length set the panel width.
        const double panel_width = std::min(1.0, 2.0 / (1.0 + std::abs(kv.k)));
        if (open_right) {
            const double from = cuts.empty() ? 0.0 : cuts.back();
            const double envelope = state.envelope * std::exp(-rate * std::max(from, 0.0));
            sum += integrate_decaying(integrand, from, rate, tol, envelope, panel_width).value;
        }
        if (open_left) {
            const double to = cuts.empty() ? 0.0 : cuts.front();
            const double envelope = state.envelope * std::exp(-rate * std::max(-to, 0.0));
            auto mirrored = [&](double u) { return integrand(-u); };
            sum += integrate_decaying(mirrored, -to, rate, tol, envelope, panel_width).value;
        }
    }
    return detail::inv_sqrt_two_pi() * sum;
}

/// rho(K) = |A(K)|^2 for a tabulated state.
inline double spectral_density_of(const SampledWave &wave, const WaveVector &kv)
{
    return std::norm(amplitude_of(wave, kv));
}

/// rho(K) = |A(K)|^2 for a closed-form state.
inline double spectral_density_of(const AnalyticState &state, const WaveVector &kv, const Tolerances &tol = {})
{
    return std::norm(amplitude_of(state, kv, tol));
}

/// R as an analytic state: even, kinked at 0, envelope exp(-|x|).
inline AnalyticState riemann_wave_state(const Tolerances &tol = {})
{
    AnalyticState state;
    state.psi = [tol](double x) { return Complex(riemann_wave(x, tol), 0.0); };
    state.decay_rate = 1.0;
    state.envelope = 1.0;
    state.breakpoints = {0.0};
    return state;
}

/// Zeros of Xi(t, 0) on [t_lo, t_hi], bracketed on a grid of spacing `step`
/// and refined by bisection to root_tol. Ascending. Zero pairs closer than
/// `step` may be missed.
inline std::vector<double> locate_zeros(double t_lo, double t_hi, double step, const Tolerances &tol = {})
{
    if (!(t_hi <= kPrecisionWallT)) {
        throw UnsupportedRangeError("locate_zeros: t beyond 35 is past the binary64 precision wall");
    }
    if (!(t_lo >= 0.0) || !(t_lo < t_hi) || !(step > 0.0)) {
        throw DomainError("locate_zeros: need 0 <= t_lo < t_hi and step > 0");
    }
    auto xi_line = [&](double t) { return xi_critical_line(t, tol); };
    std::vector<double> zeros;
    for (const auto &bracket : find_sign_changes(xi_line, t_lo, t_hi, step)) {
        zeros.push_back(bisect(xi_line, bracket, tol));
    }
    return zeros;
}

struct ScanSample
{
    double k;
    double lambda;
    double rho;
    /// rho below which the value is indistinguishable from zero given the
    /// quadrature error of the underlying Xi evaluation.
    double noise_floor;
};

/// Result of a strip scan. Samples are ordered by ascending (k, lambda).
struct ScanReport
{
    double k_lo = 0.0;
    double k_hi = 0.0;
    double k_step = 0.0;
    std::vector<double> lambdas;

    double min_value = std::numeric_limits<double>::infinity();
    double argmin_k = 0.0;
    double argmin_lambda = 0.0;
    /// k positions of counterexample candidates, ascending.
    std::vector<double> zeros;
    bool counterexample_candidate = false;
    std::size_t evaluations = 0;
    std::vector<ScanSample> samples;
};

/// Evaluates rho_R on the grid k_lo, k_lo + k_step, ..., k_hi times the
/// lambda set (off the real axis only).
///
/// A point is reported as a counterexample candidate when rho_R is not
/// resolvably above zero: |A_R| <= 10 * (quadrature error of A_R). The result
/// is independent of `threads`.
inline ScanReport strip_scan(double k_lo, double k_hi, double k_step, std::vector<double> lambdas,
                             const Tolerances &tol = {}, unsigned threads = 1)
{
    if (lambdas.empty()) {
        throw DomainError("strip_scan: the lambda set is empty");
    }
    for (double lambda : lambdas) {
        if (lambda == 0.0) {
            throw DomainError("strip_scan: lambda = 0 is the real axis; use locate_zeros for on-axis zeros");
        }
        if (!(std::abs(lambda) < 1.0)) {
            throw DomainError("strip_scan: lambda must lie in (-1, 1); zeta has no nontrivial zeros outside the "
                              "critical strip (Hadamard, de la Vallee Poussin)");
        }
    }
    if (!(k_step > 0.0) || !(k_lo <= k_hi) || !std::isfinite(k_lo)) {
        throw DomainError("strip_scan: need k_lo <= k_hi and k_step > 0");
    }
    if (!(std::max(std::abs(k_lo), std::abs(k_hi)) <= kScanWallK)) {
        throw UnsupportedRangeError("strip_scan: |k| beyond 70 is past the binary64 precision wall");
    }

    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    const auto k_count = static_cast<std::size_t>(std::floor((k_hi - k_lo) / k_step + 1e-9)) + 1;
    const std::size_t total = k_count * lambdas.size();

    ScanReport report;
    report.k_lo = k_lo;
    report.k_hi = k_hi;
    report.k_step = k_step;
    report.lambdas = lambdas;
    report.samples.resize(total);

    const double noise_scale = kCandidateNoiseFactor;
    auto evaluate = [&](std::size_t index) {
        const double k = k_lo + k_step * static_cast<double>(index / lambdas.size());
        const double lambda = lambdas[index % lambdas.size()];
        const auto amplitude = riemann_amplitude_estimate({k, lambda}, tol);
        const double floor_amplitude = noise_scale * amplitude.abs_error;
        report.samples[index] = {k, lambda, std::norm(amplitude.value), floor_amplitude * floor_amplitude};
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            evaluate(i);
        }
    } else {
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (std::size_t i = w * chunk; i < std::min(total, (w + 1) * chunk); ++i) {
                        evaluate(i);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto &worker : pool) {
            worker.join();
        }
        for (const auto &failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    // Sequential reduction: the first minimum in (k, lambda) order wins ties.
    for (const auto &sample : report.samples) {
        if (sample.rho < report.min_value) {
            report.min_value = sample.rho;
            report.argmin_k = sample.k;
            report.argmin_lambda = sample.lambda;
        }
        if (sample.rho <= sample.noise_floor) {
            report.counterexample_candidate = true;
            if (report.zeros.empty() || report.zeros.back() != sample.k) {
                report.zeros.push_back(sample.k);
            }
        }
    }
    report.evaluations = total;
    return report;
}

} // namespace riemannwave
