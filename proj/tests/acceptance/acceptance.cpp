// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   riemannwave_acceptance [--threads N]
//
// Tolerances and runtime caps are fixed below; nothing is read from the
// environment.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "riemannwave/riemannwave.hpp"

namespace rw = riemannwave;
using rw::Complex;

namespace {

// Independent references (40-digit mpmath).
constexpr double kZeros[] = {14.13472514173469379, 21.022039638771554993, 25.010857580145688763,
                             30.42487612585951321, 32.935061587739189691};
constexpr double kSpectrumAtZeroPerT0 = 2.1766187428771945711;

struct Criterion
{
    int id;
    std::string name;
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void zero_reproduction(Criterion &c)
{
    const auto start = std::chrono::steady_clock::now();
    const auto first = rw::locate_zeros(10.0, 30.0, 0.05);
    c.require(first.size() == 3, "three zeros on [10, 30]");
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, first.size()); ++i) {
        worst = std::max(worst, std::abs(first[i] - kZeros[i]));
    }
    c.require(worst <= 1e-6, "first three within 1e-6");

    const auto extended = rw::locate_zeros(10.0, 35.0, 0.05);
    c.require(extended.size() == 5, "five zeros on [10, 35]");
    double worst_ext = 0.0;
    for (std::size_t i = 3; i < std::min<std::size_t>(5, extended.size()); ++i) {
        worst_ext = std::max(worst_ext, std::abs(extended[i] - kZeros[i]));
    }
    c.require(worst_ext <= 1e-4, "zeros 4 and 5 within 1e-4");
    const double elapsed = seconds_since(start);
    c.require(elapsed <= 120.0, "runtime <= 120 s single-threaded");
    c.detail << "found " << first.size() << " + " << extended.size() - std::min(extended.size(), first.size())
             << ", max err " << worst << " / " << worst_ext << ", " << elapsed << " s";
}

void triple_agreement(Criterion &c)
{
    const auto start = std::chrono::steady_clock::now();
    double worst_omega = 0.0;
    double worst_fourier = 0.0;
    for (int t = 0; t <= 30; t += 2) {
        for (double delta : {0.0, 0.2, -0.2, 0.4, -0.4}) {
            const rw::CriticalPoint p{static_cast<double>(t), delta};
            const Complex direct = rw::xi_direct(p);
            worst_omega = std::max(worst_omega, std::abs(direct - rw::xi_omega_form(p)));
            worst_fourier = std::max(worst_fourier, std::abs(direct - rw::xi_fourier(p)));
        }
    }
    const double elapsed = seconds_since(start);
    c.require(worst_omega <= 1e-9, "|direct - omega| <= 1e-9");
    c.require(worst_fourier <= 1e-9, "|direct - fourier| <= 1e-9");
    c.require(elapsed <= 60.0, "runtime <= 60 s");
    c.detail << "max |direct-omega| " << worst_omega << ", max |direct-fourier| " << worst_fourier << ", " << elapsed
             << " s";
}

void fourier_identity(Criterion &c)
{
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> k_dist(-40.0, 40.0);
    std::uniform_real_distribution<double> lambda_dist(-0.9, 0.9);
    const auto state = rw::riemann_wave_state();
    const double scale = 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi));
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const rw::WaveVector kv{k_dist(rng), lambda_dist(rng)};
        const Complex transform = rw::amplitude_of(state, kv);
        const Complex closed = -rw::xi_direct({0.5 * kv.k, 0.5 * kv.lambda}) * scale;
        worst = std::max(worst, std::abs(transform - closed));
    }
    c.require(worst <= 1e-9, "transform of R matches -Xi/(2 sqrt(2 pi)) to 1e-9");
    c.detail << "20 strip points, max deviation " << worst;
}

void regularity_suite(Criterion &c)
{
    const double identity = 4.0 * rw::theta_prime(1.0) + rw::theta(1.0);
    c.require(std::abs(identity + 0.5) <= 1e-12, "4 theta'(1) + theta(1) = -1/2");

    double series = 0.0;
    for (int n = 1; n <= 6; ++n) {
        series += std::exp(-std::numbers::pi * n * n);
    }
    const double r0_gap = std::abs(rw::riemann_wave(0.0) - (1.0 - 2.0 * series));
    c.require(r0_gap <= 1e-14, "R(0) = 1 - 2 sum exp(-pi n^2)");

    const auto report = rw::regularity_report();
    c.require(rw::riemann_wave_deriv(0.0, 1) == 0.0, "R'(0) = 0");
    c.require(std::abs(report.right_derivative_at_zero) <= 1e-14, "R'(0+) = 0");
    c.require(report.norm.value + report.norm.abs_error < 1.0, "integral of R^2 < 1");

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = 0.01 + (4.0 - 0.01) * i / 99.0;
        worst = std::max(worst, std::abs(rw::schrodinger_residual(x)));
        worst = std::max(worst, std::abs(rw::schrodinger_residual(-x)));
    }
    c.require(worst <= 1e-10, "Schrodinger residual <= 1e-10 on 200 points");
    c.detail << "identity err " << std::abs(identity + 0.5) << ", R(0) err " << r0_gap << ", norm "
             << report.norm.value << ", max residual " << worst;
}

void well_suite(Criterion &c)
{
    double worst = 0.0;
    double min_off_axis = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 3; ++n) {
        for (double a : {1.0, 2.0}) {
            const rw::WellState s{n, a};
            const auto state = rw::well_state(s);
            for (int i = -40; i <= 40; ++i) {
                const double k = 0.5 * i;
                for (double lambda : {0.0, 0.3, -0.3, 0.9, -0.9}) {
                    const double closed = rw::well_spectral_closed(s, {k, lambda});
                    worst = std::max(worst, std::abs(closed - rw::spectral_density_of(state, {k, lambda})));
                    if (lambda != 0.0) {
                        min_off_axis = std::min(min_off_axis, closed);
                    }
                }
            }
        }
    }
    c.require(worst <= 1e-10, "closed form vs quadrature to 1e-10");
    c.require(min_off_axis > 0.0, "off-axis positivity");

    const double at_pi = rw::well_spectral_closed({1, 1.0}, {std::numbers::pi, 0.0});
    c.require(std::abs(at_pi - 1.0 / (4.0 * std::numbers::pi)) <= 1e-15, "rho_1(pi, 0) = 1/(4 pi)");

    double removable = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (double a : {1.0, 2.0}) {
            const double q = n * std::numbers::pi / a;
            for (double factor : {1.0 - 1e-9, 1.0 + 1e-9}) {
                const double v = rw::well_spectral_closed({n, a}, {q * factor, 0.0});
                removable = std::max(removable, std::abs(v - a / (4.0 * std::numbers::pi)));
            }
        }
    }
    c.require(removable <= 1e-6, "removable-point limit within 1e-6");

    bool zeros_exact = true;
    for (int n = 1; n <= 3; ++n) {
        for (double a : {1.0, 2.0}) {
            const rw::WellState s{n, a};
            for (double k : rw::well_forbidden_states(s, 12)) {
                const double m = std::round(k * a / std::numbers::pi);
                zeros_exact = zeros_exact && rw::well_spectral_at_multiple(s, m, 0.0) == 0.0 &&
                              rw::well_spectral_at_multiple(s, -m, 0.0) == 0.0;
            }
        }
    }
    c.require(zeros_exact, "parity-restricted zeros exact");
    c.detail << "max closed-vs-quadrature " << worst << ", removable err " << removable << ", min off-axis "
             << min_off_axis;
}

void strip_positivity(Criterion &c, unsigned threads)
{
    const std::vector<double> lambdas{0.2, -0.2, 0.5, -0.5, 0.8, -0.8};
    auto timed_scan = [&](unsigned n, double &elapsed) {
        const auto start = std::chrono::steady_clock::now();
        auto report = rw::strip_scan(0.0, 60.0, 0.1, lambdas, {}, n);
        elapsed = seconds_since(start);
        return report;
    };
    double serial_time = 0.0;
    const auto serial = timed_scan(1, serial_time);
    c.require(serial.min_value > 0.0, "min rho_R > 0");
    c.require(!serial.counterexample_candidate, "no counterexample flag");
    c.require(serial_time <= 600.0, "single-threaded runtime <= 600 s");
    c.detail << serial.evaluations << " points, min " << serial.min_value << " at (" << serial.argmin_k << ", "
             << serial.argmin_lambda << "), serial " << serial_time << " s";

    if (threads > 1) {
        double parallel_time = 0.0;
        const auto parallel = timed_scan(threads, parallel_time);
        bool identical = parallel.samples.size() == serial.samples.size();
        for (std::size_t i = 0; identical && i < serial.samples.size(); ++i) {
            identical = parallel.samples[i].rho == serial.samples[i].rho;
        }
        c.require(identical, "parallel scan identical to serial");
        if (threads >= 8) {
            c.require(parallel_time <= 120.0, "8-way runtime <= 120 s");
        }
        c.detail << ", " << threads << " threads " << parallel_time << " s";
    }
}

void symmetry_suite(Criterion &c)
{
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> k_dist(-60.0, 60.0);
    std::uniform_real_distribution<double> lambda_dist(-0.95, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const rw::WaveVector kv{k_dist(rng), lambda_dist(rng)};
        const double rho = rw::riemann_spectral_density(kv);
        worst = std::max(worst, std::abs(rho - rw::riemann_spectral_density({-kv.k, kv.lambda})));
        worst = std::max(worst, std::abs(rho - rw::riemann_spectral_density({kv.k, -kv.lambda})));
    }
    c.require(worst <= 1e-10, "rho_R symmetric in k and lambda to 1e-10");

    double worst_imag = 0.0;
    for (int t = 0; t <= 30; ++t) {
        worst_imag = std::max(worst_imag, std::abs(rw::xi_direct({static_cast<double>(t), 0.0}).imag()));
    }
    c.require(worst_imag <= 1e-12, "Xi(t, 0) real to 1e-12");
    c.detail << "max asymmetry " << worst << ", max |Im Xi(t,0)| " << worst_imag;
}

void autocorrelation_suite(Criterion &c)
{
    double worst_identity = 0.0;
    double worst_route = 0.0;
    double worst_s0 = 0.0;
    double worst_flip = 0.0;
    for (double t0 : {0.5, 1.0, 2.0}) {
        const rw::CorrelationParams p{t0};
        for (int i = -250; i <= 250; ++i) {
            const double t = 0.02 * i * t0;
            worst_identity = std::max(
                worst_identity, std::abs(rw::autocorrelation(t, p) - rw::riemann_wave(t / t0) / rw::riemann_wave(0.0)));
        }
        std::vector<double> grid;
        for (int i = 0; i <= 120; ++i) {
            grid.push_back(0.5 * i / t0);
        }
        for (const auto &sp : rw::autocorrelation_spectrum(grid, p)) {
            worst_route = std::max(worst_route, std::abs(sp.direct - sp.closed));
        }
        worst_s0 = std::max(worst_s0, std::abs(rw::autocorrelation_spectrum_direct(0.0, p) / t0 - kSpectrumAtZeroPerT0));
        const auto flips = rw::spectrum_sign_changes(0.0, 60.0 / t0, 0.05 / t0, p);
        c.require(!flips.empty(), "sign-change report is non-empty");
        if (!flips.empty()) {
            worst_flip = std::max(worst_flip, std::abs(flips.front() * t0 - 2.0 * 14.134725));
        }
    }
    c.require(worst_identity <= 1e-14, "tau(t) = R(t/t0)/R(0) to 1e-14");
    c.require(worst_route <= 1e-8, "spectrum routes agree to 1e-8");
    c.require(worst_s0 <= 1e-10 && std::abs(kSpectrumAtZeroPerT0 - 2.1766) < 1e-4, "S(0) = 2.1766 t0");
    c.require(worst_flip <= 1e-4, "first flip at omega t0 = 2 * 14.134725");
    c.detail << "identity err " << worst_identity << ", route err " << worst_route << ", S(0)/t0 err " << worst_s0
             << ", first-flip err " << worst_flip;
}

} // namespace

int main(int argc, char **argv)
{
    unsigned threads = 8;
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) {
            threads = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
        } else {
            std::fprintf(stderr, "usage: %s [--threads N]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<void(Criterion &)>>> suites{
        {"zero reproduction", zero_reproduction},
        {"triple-representation agreement", triple_agreement},
        {"Fourier transform of R equals -Xi/2", fourier_identity},
        {"wave function regularity and Schrodinger equation", regularity_suite},
        {"infinite well", well_suite},
        {"strip positivity scan", [threads](Criterion &c) { strip_positivity(c, threads); }},
        {"symmetries", symmetry_suite},
        {"autocorrelation", autocorrelation_suite},
    };

    int failures = 0;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        Criterion c{static_cast<int>(i + 1), suites[i].first, true, {}};
        try {
            suites[i].second(c);
        } catch (const std::exception &e) {
            c.pass = false;
            c.detail << " [exception: " << e.what() << "]";
        }
        failures += c.pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    c.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(suites.size()) - failures, suites.size());
    return failures == 0 ? 0 : 1;
}
