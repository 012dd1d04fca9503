#pragma once

// Shared numerical engine: adaptive Gauss-Kronrod quadrature, sign-change
// bracketing with bisection refinement, and the complex log-gamma function.
//
// Every routine here is a pure function of its arguments.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "riemannwave/errors.hpp"
#include "riemannwave/tolerances.hpp"

namespace riemannwave {

template <class T>
struct QuadratureResult
{
    T value{};
    double abs_error = 0.0;
    std::size_t panels = 0;
    /// Set when every remaining panel sits at the rounding floor, so the
    /// requested tolerance was not reachable in binary64.
    bool roundoff_limited = false;
    /// Upper integration limit actually used (the truncation point for
    /// semi-infinite integrals).
    double upper = 0.0;
};

/// A sign change of a real function: lo < hi and f_lo * f_hi < 0.
struct Bracket
{
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

namespace detail {

// 21-point Kronrod rule with its embedded 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline constexpr std::size_t kMaxPanels = 200000;

template <class T>
struct Panel
{
    double a;
    double b;
    T value;
    double error;
};

template <class T>
struct PanelRule
{
    T kronrod;
    double error;
    double abs_mass; // integral of |f| under the Kronrod rule
};

template <class T, class F>
PanelRule<T> gauss_kronrod_21(F &f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const T fc = static_cast<T>(f(centre));
    T kronrod = fc * kKronrodWeights[10];
    T gauss{};
    double abs_mass = std::abs(fc) * kKronrodWeights[10];

    for (std::size_t i = 0; i < 10; ++i) {
        const double dx = half * kKronrodNodes[i];
        const T f1 = static_cast<T>(f(centre - dx));
        const T f2 = static_cast<T>(f(centre + dx));
        kronrod += (f1 + f2) * kKronrodWeights[i];
        abs_mass += (std::abs(f1) + std::abs(f2)) * kKronrodWeights[i];
        if (i % 2 == 1) {
            gauss += (f1 + f2) * kGaussWeights[i / 2];
        }
    }

    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss), abs_mass * std::abs(half)};
}

template <class T>
bool heap_less(const Panel<T> &lhs, const Panel<T> &rhs)
{
    return lhs.error < rhs.error;
}

inline double tail_truncation_point(double lower, double decay_rate, double envelope, double budget)
{
    const double span = std::log(envelope / (decay_rate * budget)) / decay_rate;
    return lower + std::max(span, 1.0 / decay_rate);
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (10/21) quadrature of f over [a, b].
///
/// The interval is split into `initial_panels` equal pieces first, which keeps
/// the first error estimates meaningful for oscillatory integrands. Panels
/// whose Gauss/Kronrod discrepancy sits at the rounding floor are frozen
/// rather than refined.
template <class F>
auto integrate_interval(F &&f, double a, double b, const Tolerances &tol, std::size_t initial_panels = 1)
    -> QuadratureResult<std::invoke_result_t<F &, double>>
{
    using T = std::invoke_result_t<F &, double>;
    using detail::Panel;

    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_interval: limits must be finite");
    }
    if (a == b) {
        return {T{}, 0.0, 0, false, b};
    }
    if (a > b) {
        auto flipped = integrate_interval(f, b, a, tol, initial_panels);
        flipped.value = -flipped.value;
        flipped.upper = b;
        return flipped;
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t n0 = std::clamp<std::size_t>(initial_panels, 1, detail::kMaxPanels / 2);

    std::vector<Panel<T>> active;
    std::vector<Panel<T>> frozen;
    active.reserve(2 * n0 + 64);

    auto push_active = [&](const Panel<T> &p) {
        active.push_back(p);
        std::push_heap(active.begin(), active.end(), detail::heap_less<T>);
    };

    const double width = (b - a) / static_cast<double>(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == n0) ? b : a + width * static_cast<double>(i + 1);
        const auto rule = detail::gauss_kronrod_21<T>(f, lo, hi);
        const Panel<T> p{lo, hi, rule.kronrod, rule.error};
        if (rule.error <= 50.0 * eps * rule.abs_mass) {
            frozen.push_back(p);
        } else {
            push_active(p);
        }
    }

    auto totals = [&]() {
        T sum{};
        double active_err = 0.0;
        double frozen_err = 0.0;
        for (const auto &p : frozen) {
            sum += p.value;
            frozen_err += p.error;
        }
        for (const auto &p : active) {
            sum += p.value;
            active_err += p.error;
        }
        return std::tuple{sum, active_err, frozen_err};
    };

    auto [value, active_error, frozen_error] = totals();
    bool roundoff_limited = false;
    std::size_t steps = 0;
    for (;;) {
        const double target = std::max(tol.quad_abs_tol, tol.quad_rel_tol * std::abs(value));
        if (active_error + frozen_error <= target) {
            break;
        }
        // Frozen panels carry rounding noise that refinement cannot remove.
        if (active.empty() || (frozen_error >= 0.5 * target && active_error <= frozen_error)) {
            roundoff_limited = true;
            break;
        }
        if (active.size() + frozen.size() >= detail::kMaxPanels) {
            const double error = active_error + frozen_error;
            std::ostringstream msg;
            msg << "integrate_interval: subdivision budget exhausted on [" << a << ", " << b
                << "], estimate " << std::abs(value) << ", error " << error;
            throw ConvergenceError(msg.str(), std::abs(value), error);
        }

        std::pop_heap(active.begin(), active.end(), detail::heap_less<T>);
        const Panel<T> worst = active.back();
        active.pop_back();
        value -= worst.value;
        active_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        const auto left_rule = detail::gauss_kronrod_21<T>(f, worst.a, mid);
        const auto right_rule = detail::gauss_kronrod_21<T>(f, mid, worst.b);
        const Panel<T> left{worst.a, mid, left_rule.kronrod, left_rule.error};
        const Panel<T> right{mid, worst.b, right_rule.kronrod, right_rule.error};
        value += left.value + right.value;

        // A resolved panel whose error refuses to shrink under bisection is
        // limited by noise in f itself.
        const double mass = left_rule.abs_mass + right_rule.abs_mass;
        const double child_error = left.error + right.error;
        const bool stalled = worst.error <= 1e-9 * mass && child_error >= 0.5 * worst.error;
        const double width_floor = 64.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b));
        const bool at_floor = stalled || (mid - worst.a) <= width_floor;
        for (const auto *child : {&left, &right}) {
            const auto &rule = (child == &left) ? left_rule : right_rule;
            if (at_floor || child->error <= 50.0 * eps * rule.abs_mass) {
                frozen.push_back(*child);
                frozen_error += child->error;
            } else {
                push_active(*child);
                active_error += child->error;
            }
        }

        // Incremental sums drift; re-sum from scratch now and then.
        if (++steps % 128 == 0) {
            std::tie(value, active_error, frozen_error) = totals();
        }
    }

    std::tie(value, active_error, frozen_error) = totals();
    return {value, active_error + frozen_error, active.size() + frozen.size(), roundoff_limited, b};
}

/// Integral of f over [lower, infinity) for an integrand bounded by
/// envelope * exp(-decay_rate * (y - lower)).
///
/// The range is truncated at the first point where the analytic tail bound
/// envelope * exp(-decay_rate * (Y - lower)) / decay_rate drops below
/// quad_abs_tol / 2; the remaining half of the budget goes to the quadrature.
/// The reported error includes the tail bound.
template <class F>
auto integrate_decaying(F &&f, double lower, double decay_rate, const Tolerances &tol,
                        double envelope = 1.0, double panel_width = 1.0)
    -> QuadratureResult<std::invoke_result_t<F &, double>>
{
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
        throw DomainError("integrate_decaying: decay_rate must be positive");
    }
    if (!(envelope > 0.0) || !(panel_width > 0.0) || !std::isfinite(lower)) {
        throw DomainError("integrate_decaying: envelope and panel width must be positive, lower finite");
    }

    const double tail_budget = 0.5 * tol.quad_abs_tol;
    const double upper = detail::tail_truncation_point(lower, decay_rate, envelope, tail_budget);
    const double tail = envelope * std::exp(-decay_rate * (upper - lower)) / decay_rate;

    Tolerances inner = tol;
    inner.quad_abs_tol = tail_budget;
    const auto panels = static_cast<std::size_t>(std::ceil((upper - lower) / panel_width));
    auto result = integrate_interval(f, lower, upper, inner, std::max<std::size_t>(panels, 1));
    result.abs_error += tail;
    result.upper = upper;
    return result;
}

/// Samples f on lo, lo + step, ..., hi and returns a bracket for every sign
/// change between consecutive nonzero samples.
///
/// Two zeros closer together than `step` can cancel and go unreported.
template <class F>
std::vector<Bracket> find_sign_changes(F &&f, double lo, double hi, double step)
{
    if (!(lo < hi) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("find_sign_changes: need lo < hi and step > 0");
    }

    const auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
    std::vector<Bracket> brackets;

    bool have_previous = false;
    double prev_x = lo;
    double prev_f = 0.0;
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = (i == intervals) ? hi : lo + step * static_cast<double>(i);
        const double fx = static_cast<double>(f(x));
        if (!std::isfinite(fx)) {
            std::ostringstream msg;
            msg << "find_sign_changes: non-finite value at x = " << x;
            throw NonFiniteError(msg.str(), x);
        }
        if (fx == 0.0) {
            continue;
        }
        if (have_previous && (prev_f < 0.0) != (fx < 0.0)) {
            brackets.push_back({prev_x, x, prev_f, fx});
        }
        have_previous = true;
        prev_x = x;
        prev_f = fx;
    }
    return brackets;
}

/// Refines a bracket until its width is at most 2 * root_tol and returns the
/// midpoint of the final interval.
template <class F>
double bisect(F &&f, Bracket bracket, const Tolerances &tol)
{
    if (!(bracket.lo < bracket.hi) || !(bracket.f_lo * bracket.f_hi < 0.0)) {
        throw DomainError("bisect: bracket must satisfy lo < hi and f_lo * f_hi < 0");
    }

    double lo = bracket.lo;
    double hi = bracket.hi;
    const bool rising = bracket.f_lo < 0.0;
    while (hi - lo > 2.0 * tol.root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fm = static_cast<double>(f(mid));
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == rising) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace detail {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline std::complex<double> log_gamma_lanczos(std::complex<double> z)
{
    // log Gamma(z) for Re z >= 1/2 via Gamma(z) = sqrt(2 pi) w^(z - 1/2) e^(-w) A(z),
    // w = z + g - 1/2.
    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        series += kLanczosCoefficients[i] / (zm1 + static_cast<double>(i));
    }
    const std::complex<double> w = zm1 + kLanczosG + 0.5;
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return half_log_two_pi + (zm1 + 0.5) * std::log(w) - w + std::log(series);
}

} // namespace detail

/// Principal branch of log Gamma(z): analytic off the cut (-inf, 0], real on
/// the positive axis, and satisfying log_gamma(z + 1) = log_gamma(z) + log(z).
///
/// Re z >= 1/2 is evaluated directly from the Lanczos form; smaller real parts
/// are shifted up with the recurrence, which keeps that branch convention.
inline std::complex<double> log_gamma_complex(std::complex<double> z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("log_gamma_complex: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw DomainError("log_gamma_complex: pole at a non-positive integer");
    }
    if (z.real() >= 0.5) {
        return detail::log_gamma_lanczos(z);
    }

    const auto shift = static_cast<int>(std::ceil(0.5 - z.real()));
    std::complex<double> log_product = 0.0;
    for (int j = 0; j < shift; ++j) {
        log_product += std::log(z + static_cast<double>(j));
    }
    return detail::log_gamma_lanczos(z + static_cast<double>(shift)) - log_product;
}

} // namespace riemannwave
