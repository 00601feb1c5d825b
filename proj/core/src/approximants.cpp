#include "mlrelax/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlrelax/errors.hpp"
#include "mlrelax/eval.hpp"
#include "mlrelax/gamma.hpp"

namespace mlrelax {
namespace {

void require_subunit(Alpha alpha, const char* who) {
    if (alpha.classical())
        throw DomainError(std::string(who) + ": requires alpha < 1 (Gamma(1-alpha) pole)");
}

double require_positive_exact(const EvalResult& exact) {
    if (!(exact.value > 0.0))
        throw DomainError("relative error undefined: exact value is not positive");
    return exact.value;
}

}  // namespace

double stretched_exp(Alpha alpha, double t) {
    if (!(t >= 0.0)) throw DomainError("stretched_exp: t must be >= 0");
    return std::exp(-std::pow(t, alpha.value()) / gamma_real(1.0 + alpha.value()));
}

double power_law(Alpha alpha, double t) {
    require_subunit(alpha, "power_law");
    if (!(t > 0.0)) throw DomainError("power_law: t must be > 0");
    return std::pow(t, -alpha.value()) / gamma_real(1.0 - alpha.value());
}

double pade_small(Alpha alpha, double t) {
    if (!(t >= 0.0)) throw DomainError("pade_small: t must be >= 0");
    return 1.0 / (1.0 + std::pow(t, alpha.value()) / gamma_real(1.0 + alpha.value()));
}

double pade_large(Alpha alpha, double t) {
    require_subunit(alpha, "pade_large");
    if (!(t >= 0.0)) throw DomainError("pade_large: t must be >= 0");
    return 1.0 / (1.0 + std::pow(t, alpha.value()) * gamma_real(1.0 - alpha.value()));
}

double rel_error_abs(double approx_value, const EvalResult& exact) {
    return std::abs(approx_value - exact.value) / require_positive_exact(exact);
}

double rel_error_signed(double approx_value, const EvalResult& exact, Orientation orientation) {
    const double e = require_positive_exact(exact);
    return orientation == Orientation::approx_minus_exact ? (approx_value - e) / e
                                                          : (e - approx_value) / e;
}

const char* approximant_name(Approximant a) noexcept {
    switch (a) {
        case Approximant::stretched_exp: return "stretched_exp";
        case Approximant::power_law: return "power_law";
        case Approximant::pade_small: return "pade_small";
        case Approximant::pade_large: return "pade_large";
    }
    return "unknown";
}

namespace {

double approximant_value(Alpha alpha, Approximant which, double t) {
    switch (which) {
        case Approximant::stretched_exp: return stretched_exp(alpha, t);
        case Approximant::power_law: return power_law(alpha, t);
        case Approximant::pade_small: return pade_small(alpha, t);
        case Approximant::pade_large: return pade_large(alpha, t);
    }
    throw DomainError("unknown approximant");
}

}  // namespace

ValidityRange validity_ranges(Alpha alpha, Approximant approximant, const GridSpec& grid,
                              double threshold, Tolerance tol) {
    if (!(grid.lo > 0.0)) throw DomainError("validity_ranges: grid must lie in (0, inf)");
    if (!(threshold > 0.0)) throw DomainError("validity_ranges: threshold must be > 0");

    const std::vector<double> ts = make_grid(grid);
    auto err_at = [&](double t) {
        return rel_error_abs(approximant_value(alpha, approximant, t), eval_auto(alpha, t, tol));
    };

    std::vector<char> ok(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) ok[i] = err_at(ts[i]) <= threshold;

    // Bisect a boundary between an inside point and an outside point until
    // the bracket is tight to three significant digits; returns the inside
    // end of the refined bracket.
    auto refine = [&](double inside, double outside) {
        while (std::abs(outside - inside) >
               5e-4 * std::min(std::abs(inside), std::abs(outside))) {
            const double mid = std::sqrt(inside * outside);  // grid is log-natured
            (err_at(mid) <= threshold ? inside : outside) = mid;
        }
        return inside;
    };

    ValidityRange out;
    out.approximant = approximant;
    out.threshold = threshold;
    size_t i = 0;
    while (i < ts.size()) {
        if (!ok[i]) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < ts.size() && ok[j + 1]) ++j;
        double lo = ts[i];
        double hi = ts[j];
        if (i > 0) lo = refine(ts[i], ts[i - 1]);
        if (j + 1 < ts.size()) hi = refine(ts[j], ts[j + 1]);
        out.intervals.emplace_back(lo, hi);
        i = j + 1;
    }
    return out;
}

std::vector<double> crossing_points(Alpha alpha, const GridSpec& grid, Tolerance tol) {
    if (!(grid.lo > 0.0)) throw DomainError("crossing_points: grid must lie in (0, inf)");
    const std::vector<double> ts = make_grid(grid);

    auto diff = [&](double t) { return power_law(alpha, t) - eval_auto(alpha, t, tol).value; };

    std::vector<double> roots;
    double prev_t = ts.front();
    double prev_d = diff(prev_t);
    for (size_t i = 1; i < ts.size(); ++i) {
        const double cur_t = ts[i];
        const double cur_d = diff(cur_t);
        if (prev_d == 0.0) {
            roots.push_back(prev_t);
        } else if ((prev_d < 0.0) != (cur_d < 0.0) && cur_d != 0.0) {
            double a = prev_t, b = cur_t;
            double fa = prev_d;
            while ((b - a) > 1e-6 * 0.5 * (a + b)) {
                const double mid = 0.5 * (a + b);
                const double fm = diff(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_t = cur_t;
        prev_d = cur_d;
    }
    return roots;
}

double check_gf_inequality(Alpha alpha, const GridSpec& grid) {
    require_subunit(alpha, "check_gf_inequality");
    double worst = -std::numeric_limits<double>::infinity();
    for (double t : make_grid(grid))
        worst = std::max(worst, pade_large(alpha, t) - pade_small(alpha, t));
    return worst;
}

BoundsReport bounds_scan(Alpha alpha, const GridSpec& grid, Tolerance tol) {
    require_subunit(alpha, "bounds_scan");
    BoundsReport report;
    report.alpha = alpha.value();
    report.worst_signed_gap = -std::numeric_limits<double>::infinity();

    for (double t : make_grid(grid)) {
        const double g = pade_large(alpha, t);
        const double f = pade_small(alpha, t);
        EvalResult e;
        try {
            e = eval_auto(alpha, t, tol);
        } catch (const Error&) {
            ++report.skipped;
            continue;
        }
        const double slack = tol.abs + e.err_est;
        if (g - e.value > slack) ++report.violations_lower;
        if (e.value - f > slack) ++report.violations_upper;
        report.worst_signed_gap =
            std::max(report.worst_signed_gap, std::max(g - e.value, e.value - f));
        report.points.push_back(BoundsPoint{t, g, e.value, f});
    }
    return report;
}

}  // namespace mlrelax
