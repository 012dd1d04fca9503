#pragma once

// Argument parsing and error reporting for the riemannwave tool.
//
// Exit codes: 0 success, 2 invalid configuration or domain error, 3 request
// past the precision wall, 4 internal consistency or convergence failure.
// Failures print exactly one line to stderr:
//   error code=<n> kind=<kind> message="<text>"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli/run.hpp"

namespace riemannwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecisionWall = 3;
inline constexpr int kExitInternal = 4;

inline int report_error(std::ostream &err, int code, const char *kind, const std::string &message)
{
    std::string clean;
    for (char ch : message) {
        if (ch == '\n' || ch == '\r') {
            clean += ' ';
        } else if (ch == '"') {
            clean += '\'';
        } else {
            clean += ch;
        }
    }
    err << "error code=" << code << " kind=" << kind << " message=\"" << clean << "\"\n";
    return code;
}

namespace detail {

inline void add_range(CLI::App *sub, Range &range, const std::string &prefix, bool required)
{
    auto *lo = sub->add_option("--" + prefix + "-min", range.min, "lower end of the " + prefix + " grid");
    auto *hi = sub->add_option("--" + prefix + "-max", range.max, "upper end of the " + prefix + " grid");
    if (required) {
        lo->required();
        hi->required();
    }
}

} // namespace detail

/// Parses argv into `config`. Returns -1 to continue, or an exit code when
/// parsing ended the run (help, or a parse error already reported).
inline int parse_arguments(int argc, const char *const *argv, RunConfig &config, std::ostream &out,
                           std::ostream &err)
{
    CLI::App app{"Riemann Xi, the Riemann wave function and its spectral density", "riemannwave"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", config.output, "write to this file instead of standard output");
    app.add_option("--threads", config.threads, "worker threads for scan")->check(CLI::Range(1u, 1024u));
    app.add_option("--tol-quad", config.tol.quad_abs_tol, "absolute quadrature tolerance");
    app.add_option("--tol-root", config.tol.root_tol, "root bracket width tolerance");
    app.add_option("--tol-series", config.tol.series_tol, "series truncation tolerance");

    auto *xi = app.add_subcommand("xi", "evaluate Xi at s = 1/2 + delta + i t");
    xi->add_option("--t", config.t)->required();
    xi->add_option("--delta", config.delta);
    xi->add_option("--method", config.method, "direct, omega, fourier or all")
        ->check(CLI::IsMember({"direct", "omega", "fourier", "all"}));

    auto *zeros = app.add_subcommand("zeros", "locate zeros of Xi on the critical line");
    detail::add_range(zeros, config.t_range, "t", true);
    zeros->add_option("--step", config.t_range.step, "bracketing grid spacing");

    auto *scan = app.add_subcommand("scan", "scan rho_R over the critical strip");
    detail::add_range(scan, config.k_range, "k", true);
    scan->add_option("--k-step", config.k_range.step);
    scan->add_option("--lambda", config.lambdas, "one or more lambda values")->required()->delimiter(',');

    auto *wave = app.add_subcommand("wavefunction", "tabulate R, u_R and the Schrodinger residual");
    detail::add_range(wave, config.x_range, "x", false);
    wave->add_option("--x-step", config.x_range.step);

    auto *well = app.add_subcommand("well", "infinite-well spectral density");
    well->add_option("--n", config.n)->required();
    well->add_option("--a", config.a)->required();
    detail::add_range(well, config.k_range, "k", true);
    well->add_option("--k-step", config.k_range.step);
    well->add_option("--lambda", config.lambdas)->required()->delimiter(',');
    well->add_flag("--quadrature", config.quadrature, "add the transform of psi_n by quadrature");

    auto *autocorr = app.add_subcommand("autocorr", "autocorrelation tau and its spectrum");
    autocorr->add_option("--t0", config.t0);
    Range lags{0.0, 5.0, 0.1};
    detail::add_range(autocorr, lags, "t", false);
    autocorr->add_option("--t-step", lags.step);
    Range omega{0.0, 60.0, 0.5};
    auto *omega_min = autocorr->add_option("--omega-min", omega.min);
    auto *omega_max = autocorr->add_option("--omega-max", omega.max);
    auto *omega_step = autocorr->add_option("--omega-step", omega.step);

    auto *spectral = app.add_subcommand("spectral-of", "spectral density of a sampled wave function");
    spectral->add_option("--input", config.input, "CSV file with header x,re,im")->required();
    detail::add_range(spectral, config.k_range, "k", true);
    spectral->add_option("--k-step", config.k_range.step);
    spectral->add_option("--lambda", config.lambdas)->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        return report_error(err, kExitConfig, "usage", e.what());
    }

    if (zeros->parsed()) {
        config.command = Command::zeros;
    } else if (xi->parsed()) {
        config.command = Command::xi;
    } else if (scan->parsed()) {
        config.command = Command::scan;
    } else if (wave->parsed()) {
        config.command = Command::wavefunction;
    } else if (well->parsed()) {
        config.command = Command::well;
    } else if (autocorr->parsed()) {
        config.command = Command::autocorr;
        config.t_range = lags;
        if (omega_min->count() + omega_max->count() + omega_step->count() > 0) {
            config.omega_range = omega;
        }
    } else {
        config.command = Command::spectral_of;
    }
    config.format = format == "json" ? Format::json : Format::csv;
    return -1;
}

/// The whole tool: parse, run, write. Returns the process exit code.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig config;
    if (const int code = parse_arguments(argc, argv, config, out, err); code >= 0) {
        return code;
    }
    try {
        const Table table = run(config);
        // Render fully before touching the output file so a failure never
        // leaves a partial artifact behind.
        std::ostringstream rendered;
        write_table(rendered, table, config.format);
        if (config.output.empty()) {
            out << rendered.str();
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file || !(file << rendered.str())) {
                return report_error(err, kExitConfig, "io", "cannot write output file '" + config.output + "'");
            }
        }
        return kExitOk;
    } catch (const UnsupportedRangeError &e) {
        return report_error(err, kExitPrecisionWall, "precision_wall", e.what());
    } catch (const DomainError &e) {
        return report_error(err, kExitConfig, "domain", e.what());
    } catch (const ConsistencyError &e) {
        return report_error(err, kExitInternal, "consistency", e.what());
    } catch (const ConvergenceError &e) {
        return report_error(err, kExitInternal, "convergence", e.what());
    } catch (const NonFiniteError &e) {
        return report_error(err, kExitInternal, "non_finite", e.what());
    } catch (const std::exception &e) {
        return report_error(err, kExitInternal, "internal", e.what());
    }
}

} // namespace riemannwave::cli
