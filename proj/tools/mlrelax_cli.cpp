// Command-line front end: deterministic CSV emission for every figure-style
// artifact plus machine-readable pass/fail reports for the bound scans.
//
// Exit codes: 0 success, 1 property violation (bounds scan), 2 usage or
// domain error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlrelax/approximants.hpp"
#include "mlrelax/eval.hpp"
#include "mlrelax/fracsolve.hpp"
#include "mlrelax/grid.hpp"
#include "mlrelax/spectrum.hpp"

namespace {

using namespace mlrelax;

// 17 significant digits, C locale, '\n' endings: identical flags must give
// byte-identical output on any host.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct GridFlags {
    double lo = 1e-5;
    double hi = 1e5;
    int n = 1001;
    bool log_spacing = true;

    GridSpec spec() const { return {lo, hi, n, log_spacing ? Spacing::log : Spacing::linear}; }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--grid-lo", g.lo, "Grid lower end");
    cmd->add_option("--grid-hi", g.hi, "Grid upper end");
    cmd->add_option("--grid-n", g.n, "Grid point count");
    cmd->add_flag("--grid-log,!--grid-linear", g.log_spacing, "Geometric vs arithmetic spacing");
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + path);
    return file;
}

const std::map<std::string, Method> kMethodNames{
    {"series", Method::series},         {"asymptotic", Method::asymptotic},
    {"spectral", Method::spectral},     {"auto", Method::automatic},
    {"exponential", Method::exponential},
};

const std::map<std::string, Approximant> kApproximantNames{
    {"stretched_exp", Approximant::stretched_exp},
    {"power_law", Approximant::power_law},
    {"pade_small", Approximant::pade_small},
    {"pade_large", Approximant::pade_large},
};

const std::map<std::string, Scheme> kSchemeNames{
    {"caputo_gl", Scheme::caputo_gl},
    {"rl_gl", Scheme::rl_gl},
};

int run_eval(double alpha, double t, const std::string& method, Tolerance tol) {
    const Alpha a(alpha);
    EvalResult r;
    switch (kMethodNames.at(method)) {
        case Method::series: r = eval_series(a, t, tol); break;
        case Method::asymptotic: r = eval_asymptotic(a, t); break;
        case Method::spectral: r = eval_spectral(a, t, tol); break;
        case Method::exponential:
            if (!a.classical()) throw DomainError("method exponential requires alpha = 1");
            [[fallthrough]];
        case Method::automatic: r = eval_auto(a, t, tol); break;
    }
    std::cout << fmt(r.value) << "," << fmt(r.err_est) << "," << method_name(r.method) << "\n";
    return 0;
}

int run_spectrum(double alpha, const GridFlags& grid, const std::string& kind,
                 const std::string& out) {
    const Alpha a(alpha);
    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "abscissa,density\n";
    for (double x : make_grid(grid.spec())) {
        const double d = (kind == "time") ? kernel_time(a, x) : kernel_freq(a, x);
        os << fmt(x) << "," << fmt(d) << "\n";
    }
    return 0;
}

constexpr double kFigureAlphas[5] = {0.25, 0.50, 0.75, 0.90, 0.99};

void write_figure(int which, const std::filesystem::path& dir, int grid_n, Tolerance tol_in) {
    // The relative-error columns compare closed forms against e_alpha; keep
    // the evaluator's own truncation well below anything the figures show.
    const Tolerance tol(std::min(tol_in.rel, 1e-12), tol_in.abs);
    char name[16];
    std::snprintf(name, sizeof(name), "fig%02d.csv", which);
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw DomainError("cannot open output file: " + (dir / name).string());

    if (which == 1) {
        // spectral function K_alpha(r) on 0 < r <= 2
        os << "alpha,r,K\n";
        for (double av : {0.25, 0.50, 0.75, 0.90}) {
            const Alpha a(av);
            for (double r : make_grid({0.005, 2.0, 400, Spacing::linear}))
                os << fmt(av) << "," << fmt(r) << "," << fmt(kernel_freq(a, r)) << "\n";
        }
        return;
    }
    if (which == 2) {
        // e_alpha(t) on 0 <= t <= 15
        os << "alpha,t,e\n";
        for (double av : {0.25, 0.50, 0.75, 0.90, 1.0}) {
            const Alpha a(av);
            for (double t : make_grid({0.0, 15.0, 751, Spacing::linear}))
                os << fmt(av) << "," << fmt(t) << "," << fmt(eval_auto(a, t, tol).value) << "\n";
        }
        return;
    }

    const Alpha a(kFigureAlphas[(which - 3) % 5]);
    const auto ts = make_grid({1e-5, 1e5, grid_n, Spacing::log});
    if (which <= 7) {
        // stretched exponential / power law with absolute relative errors
        os << "t,e,e0,einf,relerr_e0,relerr_einf\n";
        for (double t : ts) {
            const EvalResult e = eval_auto(a, t, tol);
            const double e0 = stretched_exp(a, t);
            const double einf = power_law(a, t);
            os << fmt(t) << "," << fmt(e.value) << "," << fmt(e0) << "," << fmt(einf) << ","
               << fmt(rel_error_abs(e0, e)) << "," << fmt(rel_error_abs(einf, e)) << "\n";
        }
    } else {
        // Pade pair with signed relative errors
        os << "t,e,f,g,relerr_f,relerr_g\n";
        for (double t : ts) {
            const EvalResult e = eval_auto(a, t, tol);
            const double f = pade_small(a, t);
            const double g = pade_large(a, t);
            os << fmt(t) << "," << fmt(e.value) << "," << fmt(f) << "," << fmt(g) << ","
               << fmt(rel_error_signed(f, e, Orientation::approx_minus_exact)) << ","
               << fmt(rel_error_signed(g, e, Orientation::exact_minus_approx)) << "\n";
        }
    }
}

int run_figures(const std::vector<int>& which, const std::string& outdir, int grid_n,
                Tolerance tol) {
    for (int w : which)
        if (w < 1 || w > 12) throw DomainError("unknown figure id (valid: 1..12)");
    std::filesystem::create_directories(outdir.empty() ? "." : outdir);
    for (int w : which) write_figure(w, outdir.empty() ? "." : outdir, grid_n, tol);
    return 0;
}

int run_bounds_scan(const std::vector<double>& alphas, const GridFlags& grid, Tolerance tol,
                    const std::string& out) {
    if (alphas.empty()) throw DomainError("bounds-scan: need at least one --alpha");
    if (!(grid.lo > 0.0))
        throw DomainError("bounds-scan: scan domain is t > 0 (t = 0 is the trivial equality)");
    for (double av : alphas)
        if (av >= 1.0) throw DomainError("bounds-scan: requires alpha < 1");

    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "alpha,points,violations_lower,violations_upper,worst_signed_gap,skipped\n";
    bool violated = false;
    for (double av : alphas) {
        const BoundsReport rep = bounds_scan(Alpha(av), grid.spec(), tol);
        std::cerr << "alpha=" << fmt(av) << ": points=" << rep.points.size()
                  << " violations_lower=" << rep.violations_lower
                  << " violations_upper=" << rep.violations_upper
                  << " worst_signed_gap=" << fmt(rep.worst_signed_gap)
                  << " skipped=" << rep.skipped << "\n";
        os << fmt(av) << "," << rep.points.size() << "," << rep.violations_lower << ","
           << rep.violations_upper << "," << fmt(rep.worst_signed_gap) << "," << rep.skipped
           << "\n";
        violated = violated || rep.violations_lower > 0 || rep.violations_upper > 0;
    }
    return violated ? 1 : 0;
}

int run_solve(double alpha, double h, double horizon, const std::string& scheme, bool richardson,
              Tolerance tol, const std::string& out) {
    const Alpha a(alpha);
    const Scheme sc = kSchemeNames.at(scheme);
    const SolverRun run = solve_relaxation(a, h, horizon, sc, tol);

    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "t,u_numeric,u_analytic,abs_err\n";
    for (const auto& [tk, uk] : run.trajectory) {
        const double ua = eval_auto(a, tk, tol).value;
        os << fmt(tk) << "," << fmt(uk) << "," << fmt(ua) << "," << fmt(std::abs(uk - ua))
           << "\n";
    }
    os << "# max_abs_err=" << fmt(run.max_abs_err) << "\n";
    if (richardson) {
        const double hs[3] = {h, 0.5 * h, 0.25 * h};
        const auto pts = convergence_study(a, hs, horizon, sc, tol);
        os << "# observed_order=" << fmt(pts[1].observed_order) << ","
           << fmt(pts[2].observed_order) << "\n";
    }
    return 0;
}

int run_validity(double alpha, const std::string& approximant, const GridFlags& grid,
                 double threshold, Tolerance tol, const std::string& out) {
    const ValidityRange v = validity_ranges(Alpha(alpha), kApproximantNames.at(approximant),
                                            grid.spec(), threshold, tol);
    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "approximant,threshold,t_lo,t_hi\n";
    for (const auto& [lo, hi] : v.intervals)
        os << approximant_name(v.approximant) << "," << fmt(v.threshold) << "," << fmt(lo) << ","
           << fmt(hi) << "\n";
    return 0;
}

int run_laplace(double alpha, const std::vector<double>& svals, Tolerance tol,
                const std::string& out) {
    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "s,lhs,rhs,rel_diff\n";
    for (double s : svals) {
        const LaplacePair p = laplace_check(Alpha(alpha), s, tol);
        os << fmt(s) << "," << fmt(p.lhs) << "," << fmt(p.rhs) << ","
           << fmt(std::abs(p.lhs - p.rhs) / std::abs(p.rhs)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mittag-Leffler relaxation toolkit: evaluators, spectra, bounds, solvers"};
    app.require_subcommand(1);

    double tol_rel = 1e-10;
    app.add_option("--tol", tol_rel, "Target relative tolerance")
        ->envname("MLRELAX_TOL")
        ->check(CLI::Range(1e-15, 1e-2));

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate e_alpha(t)");
    double ev_alpha = 0.5, ev_t = 1.0;
    std::string ev_method = "auto";
    eval_cmd->add_option("--alpha", ev_alpha, "Order parameter in (0, 1]")->required();
    eval_cmd->add_option("--t", ev_t, "Time, >= 0")->required();
    eval_cmd->add_option("--method", ev_method, "series|asymptotic|spectral|auto")
        ->check(CLI::IsMember({"series", "asymptotic", "spectral", "auto", "exponential"}));

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "Emit K_alpha(r) or H_alpha(tau) as CSV");
    double sp_alpha = 0.5;
    std::string sp_kind = "freq", sp_out;
    GridFlags sp_grid{0.01, 2.0, 200, false};
    spec_cmd->add_option("--alpha", sp_alpha)->required();
    spec_cmd->add_option("--kind", sp_kind, "freq|time")
        ->check(CLI::IsMember({"freq", "time"}));
    add_grid_flags(spec_cmd, sp_grid);
    spec_cmd->add_option("--out", sp_out, "Output file (default: stdout)");

    // figures
    auto* fig_cmd = app.add_subcommand("figures", "Emit the figure datasets as CSV files");
    std::vector<int> fig_which;
    std::string fig_out = ".";
    int fig_n = 1001;
    fig_cmd->add_option("--which", fig_which, "Figure ids, 1..12 (default: all)")
        ->delimiter(',');
    fig_cmd->add_option("--out", fig_out, "Output directory");
    fig_cmd->add_option("--grid-n", fig_n, "Points per log grid");

    // bounds-scan
    auto* bounds_cmd = app.add_subcommand("bounds-scan", "Scan the sandwich g <= e <= f");
    std::vector<double> bs_alphas;
    std::string bs_out;
    GridFlags bs_grid;
    bounds_cmd->add_option("--alpha", bs_alphas, "Alphas to scan (< 1)")
        ->required()
        ->delimiter(',');
    add_grid_flags(bounds_cmd, bs_grid);
    bounds_cmd->add_option("--out", bs_out, "CSV output file (default: stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Fractional relaxation time stepper");
    double so_alpha = 0.5, so_h = 1e-3, so_horizon = 5.0;
    std::string so_scheme = "caputo_gl", so_out;
    bool so_rich = false;
    solve_cmd->add_option("--alpha", so_alpha)->required();
    solve_cmd->add_option("--h", so_h, "Step size")->required();
    solve_cmd->add_option("--horizon", so_horizon, "Final time")->required();
    solve_cmd->add_option("--scheme", so_scheme, "caputo_gl|rl_gl")
        ->check(CLI::IsMember({"caputo_gl", "rl_gl"}));
    solve_cmd->add_flag("--richardson", so_rich, "Also report observed order from h, h/2, h/4");
    solve_cmd->add_option("--out", so_out, "CSV output file (default: stdout)");

    // validity
    auto* val_cmd = app.add_subcommand("validity", "Validity ranges at an error threshold");
    double va_alpha = 0.5, va_threshold = 0.01;
    std::string va_approx = "pade_small", va_out;
    GridFlags va_grid{1e-5, 1e5, 401, true};
    val_cmd->add_option("--alpha", va_alpha)->required();
    val_cmd->add_option("--approximant", va_approx,
                        "stretched_exp|power_law|pade_small|pade_large")
        ->check(CLI::IsMember({"stretched_exp", "power_law", "pade_small", "pade_large"}));
    val_cmd->add_option("--threshold", va_threshold, "Relative-error threshold");
    add_grid_flags(val_cmd, va_grid);
    val_cmd->add_option("--out", va_out, "CSV output file (default: stdout)");

    // laplace
    auto* lap_cmd = app.add_subcommand("laplace", "Check the Laplace-transform pair");
    double la_alpha = 0.5;
    std::vector<double> la_s{1.0};
    std::string la_out;
    lap_cmd->add_option("--alpha", la_alpha)->required();
    lap_cmd->add_option("--s", la_s, "Laplace abscissae, > 0")->delimiter(',');
    lap_cmd->add_option("--out", la_out, "CSV output file (default: stdout)");

    try {
        app.parse(argc, argv);
        const Tolerance tol(tol_rel, 0.0);
        if (*eval_cmd) return run_eval(ev_alpha, ev_t, ev_method, tol);
        if (*spec_cmd) return run_spectrum(sp_alpha, sp_grid, sp_kind, sp_out);
        if (*fig_cmd) {
            if (fig_which.empty())
                for (int w = 1; w <= 12; ++w) fig_which.push_back(w);
            return run_figures(fig_which, fig_out, fig_n, tol);
        }
        if (*bounds_cmd) return run_bounds_scan(bs_alphas, bs_grid, tol, bs_out);
        if (*solve_cmd)
            return run_solve(so_alpha, so_h, so_horizon, so_scheme, so_rich, tol, so_out);
        if (*val_cmd)
            return run_validity(va_alpha, va_approx, va_grid, va_threshold, tol, va_out);
        if (*lap_cmd) return run_laplace(la_alpha, la_s, tol, la_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help is a success, anything else is usage
    } catch (const mlrelax::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
