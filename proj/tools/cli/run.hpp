#pragma once

// Command execution for the riemannwave tool: a validated RunConfig in, a
// Table out. Argument parsing lives in app.hpp.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cli/table.hpp"
#include "riemannwave/riemannwave.hpp"

namespace riemannwave::cli {

enum class Command { xi, zeros, scan, wavefunction, well, autocorr, spectral_of };

inline const char *command_name(Command c)
{
    switch (c) {
    case Command::xi: return "xi";
    case Command::zeros: return "zeros";
    case Command::scan: return "scan";
    case Command::wavefunction: return "wavefunction";
    case Command::well: return "well";
    case Command::autocorr: return "autocorr";
    case Command::spectral_of: return "spectral-of";
    }
    return "?";
}

/// Inclusive grid min, min + step, ..., max.
struct Range
{
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    // Generous, but keeps a typo from allocating gigabytes.
    static constexpr double kMaxPoints = 1e7;

    void validate(const char *name) const
    {
        if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
            throw DomainError(std::string(name) + ": range bounds and step must be finite");
        }
        if (!(min <= max)) {
            throw DomainError(std::string(name) + ": empty range, min > max");
        }
        if (!(step > 0.0)) {
            throw DomainError(std::string(name) + ": step must be positive");
        }
        if ((max - min) / step + 1.0 > kMaxPoints) {
            throw DomainError(std::string(name) + ": too many grid points");
        }
    }

    std::vector<double> points() const
    {
        const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
        std::vector<double> xs(count);
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = min + step * static_cast<double>(i);
        }
        return xs;
    }
};

struct RunConfig
{
    Command command = Command::xi;
    Tolerances tol;
    Format format = Format::csv;
    std::string output; ///< empty: standard output
    unsigned threads = 1;

    // xi
    double t = 0.0;
    double delta = 0.0;
    std::string method = "direct";

    // zeros (t), scan / well / spectral-of (k), wavefunction (x), autocorr (t, omega)
    Range t_range{10.0, 30.0, 0.05};
    Range k_range{0.0, 10.0, 0.5};
    Range x_range{-4.0, 4.0, 0.05};
    std::optional<Range> omega_range;
    std::vector<double> lambdas;

    // well
    int n = 1;
    double a = 1.0;
    bool quadrature = false;

    // autocorr
    double t0 = 1.0;

    // spectral-of
    std::string input;

    void validate() const
    {
        tol.validate();
        if (threads < 1) {
            throw DomainError("threads must be >= 1");
        }
        switch (command) {
        case Command::xi:
            if (method != "direct" && method != "omega" && method != "fourier" && method != "all") {
                throw DomainError("xi: method must be direct, omega, fourier or all");
            }
            if (!std::isfinite(t) || !std::isfinite(delta)) {
                throw DomainError("xi: t and delta must be finite");
            }
            break;
        case Command::zeros:
            t_range.validate("zeros");
            break;
        case Command::scan:
        case Command::spectral_of:
            k_range.validate(command_name(command));
            if (lambdas.empty()) {
                throw DomainError(std::string(command_name(command)) + ": at least one lambda is required");
            }
            break;
        case Command::wavefunction:
            x_range.validate("wavefunction");
            break;
        case Command::well:
            k_range.validate("well");
            WellState{n, a}.validate();
            if (lambdas.empty()) {
                throw DomainError("well: at least one lambda is required");
            }
            break;
        case Command::autocorr:
            t_range.validate("autocorr");
            if (omega_range) {
                omega_range->validate("autocorr omega");
            }
            CorrelationParams{t0}.validate();
            break;
        }
        for (double lambda : lambdas) {
            if (!std::isfinite(lambda)) {
                throw DomainError("lambda values must be finite");
            }
        }
    }
};

namespace detail {

inline std::vector<double> sorted_unique(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

inline Table run_xi(const RunConfig &c)
{
    Table table{"xi", {"t", "delta", "re", "im", "method"}, {}, {}};
    const CriticalPoint p{c.t, c.delta};
    std::vector<std::pair<std::string, Complex>> values;
    std::vector<std::pair<std::string, nlohmann::json>> notes;

    if (c.method == "direct" || c.method == "all") {
        values.emplace_back("direct", xi_direct(p, c.tol));
    }
    if (c.method == "omega" || c.method == "all") {
        values.emplace_back("omega", xi_omega_form(p, c.tol));
    }
    if (c.method == "fourier") {
        values.emplace_back("fourier", xi_fourier(p, c.tol));
    } else if (c.method == "all") {
        if (std::abs(c.delta) < kFourierDeltaLimit) {
            values.emplace_back("fourier", xi_fourier(p, c.tol));
        } else {
            notes.emplace_back("fourier", "unsupported for |delta| >= 0.49");
        }
    }

    for (const auto &[name, v] : values) {
        table.rows.push_back({c.t, c.delta, v.real(), v.imag(), name});
    }
    if (values.size() > 1) {
        std::vector<std::pair<std::string, nlohmann::json>> deltas;
        double worst = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                const double d = std::abs(values[i].second - values[j].second);
                worst = std::max(worst, d);
                deltas.emplace_back(values[i].first + "_" + values[j].first, d);
            }
        }
        deltas.emplace_back("max_delta", worst);
        table.summary.push_back(std::move(deltas));
    }
    if (!notes.empty()) {
        table.summary.push_back(std::move(notes));
    }
    return table;
}

inline Table run_zeros(const RunConfig &c)
{
    Table table{"zeros", {"index", "t", "k"}, {}, {}};
    const auto zeros = locate_zeros(c.t_range.min, c.t_range.max, c.t_range.step, c.tol);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        table.rows.push_back({static_cast<double>(i + 1), zeros[i], 2.0 * zeros[i]});
    }
    table.summary.push_back({{"count", zeros.size()}});
    return table;
}

inline Table run_scan(const RunConfig &c)
{
    Table table{"scan", {"k", "lambda", "rho"}, {}, {}};
    const auto report = strip_scan(c.k_range.min, c.k_range.max, c.k_range.step, c.lambdas, c.tol, c.threads);
    for (const auto &s : report.samples) {
        table.rows.push_back({s.k, s.lambda, s.rho});
    }
    table.summary.push_back(
        {{"min", report.min_value}, {"argmin_k", report.argmin_k}, {"argmin_lambda", report.argmin_lambda}});
    table.summary.push_back({{"zeros", report.zeros},
                             {"counterexample", report.counterexample_candidate},
                             {"evaluations", report.evaluations}});
    return table;
}

inline Table run_wavefunction(const RunConfig &c)
{
    Table table{"wavefunction", {"x", "R", "uR", "residual"}, {}, {}};
    for (double x : c.x_range.points()) {
        Cell residual;
        if (std::abs(x) >= kKinkExclusion) {
            residual = schrodinger_residual(x, c.tol);
        }
        table.rows.push_back({x, riemann_wave(x, c.tol), potential(x, c.tol), residual});
    }
    const auto report = regularity_report(c.tol);
    table.summary.push_back({{"R0", report.value_at_zero},
                             {"theta_limit", report.theta_series_limit},
                             {"dR0_right", report.right_derivative_at_zero},
                             {"theta_identity", report.theta_identity}});
    table.summary.push_back(
        {{"norm", report.norm.value}, {"norm_error", report.norm.abs_error}, {"energy", kGroundStateEnergy}});
    return table;
}

inline Table run_well(const RunConfig &c)
{
    const WellState s{c.n, c.a};
    Table table{"well", {"k", "lambda", "rho_closed"}, {}, {}};
    if (c.quadrature) {
        table.columns.push_back("rho_quadrature");
    }

    // Grid points plus every multiple of pi/a inside the range, where the
    // removable point and the zeros sit. Multiples use the exact-phase path.
    struct KPoint
    {
        double k;
        std::optional<int> multiple;
    };
    std::vector<KPoint> ks;
    for (double k : c.k_range.points()) {
        ks.push_back({k, std::nullopt});
    }
    const double unit = std::numbers::pi / c.a;
    const auto m_lo = static_cast<int>(std::ceil(c.k_range.min / unit));
    const auto m_hi = static_cast<int>(std::floor(c.k_range.max / unit));
    for (int m = m_lo; m <= m_hi; ++m) {
        ks.push_back({m * unit, m});
    }
    std::stable_sort(ks.begin(), ks.end(), [](const KPoint &l, const KPoint &r) { return l.k < r.k; });

    const auto lambdas = sorted_unique(c.lambdas);
    const auto state = c.quadrature ? std::optional<AnalyticState>(well_state(s)) : std::nullopt;
    double previous = -std::numeric_limits<double>::infinity();
    for (const auto &kp : ks) {
        if (kp.k == previous) {
            continue;
        }
        previous = kp.k;
        for (double lambda : lambdas) {
            const double closed = kp.multiple ? well_spectral_at_multiple(s, *kp.multiple, lambda)
                                              : well_spectral_closed(s, {kp.k, lambda});
            std::vector<Cell> row{kp.k, lambda, closed};
            if (state) {
                row.emplace_back(spectral_density_of(*state, {kp.k, lambda}, c.tol));
            }
            table.rows.push_back(std::move(row));
        }
    }

    const double reach = std::max(std::abs(c.k_range.min), std::abs(c.k_range.max));
    const int m_max = static_cast<int>(std::floor(reach / unit + 1e-12));
    if (m_max >= 1) {
        table.summary.push_back({{"forbidden_k", well_forbidden_states(s, m_max)}});
        std::vector<double> ms;
        std::vector<double> rhos;
        for (const auto &v : well_opposite_parity_values(s, m_max)) {
            ms.push_back(v.m);
            rhos.push_back(v.rho);
        }
        if (!ms.empty()) {
            // rho_n(m pi/a, 0) does not vanish when m and n differ in parity.
            table.summary.push_back({{"opposite_parity_m", ms}, {"opposite_parity_rho", rhos}});
        }
    }
    table.summary.push_back({{"removable_value", c.a / (4.0 * std::numbers::pi)}});
    return table;
}

inline Table run_autocorr(const RunConfig &c)
{
    const CorrelationParams p{c.t0};
    Table table{"autocorr", {"t", "tau"}, {}, {}};
    const auto ts = c.t_range.points();
    std::vector<SpectrumPoint> spectrum;
    if (c.omega_range) {
        table.columns.insert(table.columns.end(), {"omega", "S"});
        spectrum = autocorrelation_spectrum(c.omega_range->points(), p, c.tol);
    }
    const std::size_t rows = std::max(ts.size(), spectrum.size());
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Cell> row;
        if (i < ts.size()) {
            row.insert(row.end(), {ts[i], autocorrelation(ts[i], p, c.tol)});
        } else {
            row.insert(row.end(), {Cell{}, Cell{}});
        }
        if (c.omega_range) {
            if (i < spectrum.size()) {
                row.insert(row.end(), {spectrum[i].omega, spectrum[i].direct});
            } else {
                row.insert(row.end(), {Cell{}, Cell{}});
            }
        }
        table.rows.push_back(std::move(row));
    }
    table.summary.push_back({{"t0", c.t0}, {"S0", autocorrelation_spectrum_closed(0.0, p, c.tol)}});
    if (c.omega_range) {
        double route_delta = 0.0;
        std::size_t negative = 0;
        for (const auto &sp : spectrum) {
            route_delta = std::max(route_delta, std::abs(sp.direct - sp.closed));
            negative += sp.negative ? 1 : 0;
        }
        const auto flips =
            spectrum_sign_changes(c.omega_range->min, c.omega_range->max, c.omega_range->step, p, c.tol);
        table.summary.push_back({{"route_delta", route_delta},
                                 {"negative_count", negative},
                                 {"sign_changes", flips},
                                 {"positive_semidefinite", flips.empty() && negative == 0}});
    }
    return table;
}

inline Table run_spectral_of(const RunConfig &c)
{
    std::ifstream in(c.input);
    if (!in) {
        throw DomainError("spectral-of: cannot open input file '" + c.input + "'");
    }
    const auto wave = read_sampled_wave_csv(in);
    Table table{"spectral-of", {"k", "lambda", "rho"}, {}, {}};
    const auto lambdas = sorted_unique(c.lambdas);
    for (double k : c.k_range.points()) {
        for (double lambda : lambdas) {
            table.rows.push_back({k, lambda, spectral_density_of(wave, {k, lambda})});
        }
    }
    table.summary.push_back({{"samples", wave.xs.size()}, {"x_min", wave.xs.front()}, {"x_max", wave.xs.back()}});
    return table;
}

} // namespace detail

/// Evaluates the configured command. Throws the library's error types.
inline Table run(const RunConfig &config)
{
    config.validate();
    switch (config.command) {
    case Command::xi: return detail::run_xi(config);
    case Command::zeros: return detail::run_zeros(config);
    case Command::scan: return detail::run_scan(config);
    case Command::wavefunction: return detail::run_wavefunction(config);
    case Command::well: return detail::run_well(config);
    case Command::autocorr: return detail::run_autocorr(config);
    case Command::spectral_of: return detail::run_spectral_of(config);
    }
    throw ConsistencyError("run: unknown command");
}

} // namespace riemannwave::cli
