#pragma once

#include <utility>
#include <vector>

#include "mlrelax/grid.hpp"
#include "mlrelax/types.hpp"

namespace mlrelax {

/// Small-time surrogate exp(-t^alpha / Gamma(1+alpha)).
double stretched_exp(Alpha alpha, double t);

/// Large-time surrogate t^-alpha / Gamma(1-alpha); requires t > 0 and
/// alpha < 1. Equal to sin(alpha pi) Gamma(alpha) / (pi t^alpha) by the
/// reflection formula.
double power_law(Alpha alpha, double t);

/// Pade [0/1] of the power series in t^alpha: 1 / (1 + t^alpha/Gamma(1+alpha)).
double pade_small(Alpha alpha, double t);

/// Pade [0/1] of the asymptotic series: 1 / (1 + t^alpha Gamma(1-alpha));
/// requires alpha < 1.
double pade_large(Alpha alpha, double t);

/// |approx - exact| / exact; requires exact.value > 0.
double rel_error_abs(double approx_value, const EvalResult& exact);

enum class Orientation { approx_minus_exact, exact_minus_approx };

/// Signed relative error in the requested orientation; non-negative exactly
/// when the corresponding bound ordering holds.
double rel_error_signed(double approx_value, const EvalResult& exact, Orientation orientation);

enum class Approximant { stretched_exp, power_law, pade_small, pade_large };

const char* approximant_name(Approximant a) noexcept;

struct ValidityRange {
    Approximant approximant{};
    double threshold{0.01};
    std::vector<std::pair<double, double>> intervals;  // disjoint, increasing
};

/// Maximal sub-intervals of the grid where the absolute relative error of
/// the approximant against eval_auto stays at or below `threshold`, endpoint
/// boundaries refined by bisection to three significant digits.
ValidityRange validity_ranges(Alpha alpha, Approximant approximant, const GridSpec& grid,
                              double threshold = 0.01, Tolerance tol = {});

/// Abscissae where power_law - e_alpha changes sign, bracketed on the grid
/// and refined by bisection to 1e-6 relative width. May be empty.
std::vector<double> crossing_points(Alpha alpha, const GridSpec& grid, Tolerance tol = {});

/// max over the grid of pade_large - pade_small; the proven ordering
/// g_alpha <= f_alpha makes this <= 0 up to roundoff.
double check_gf_inequality(Alpha alpha, const GridSpec& grid);

struct BoundsPoint {
    double t{};
    double g{};
    double e{};
    double f{};
};

struct BoundsReport {
    double alpha{};
    std::vector<BoundsPoint> points;
    long violations_lower{};    // count of g > e beyond tolerance
    long violations_upper{};    // count of e > f beyond tolerance
    double worst_signed_gap{};  // max over points of max(g-e, e-f)
    long skipped{};             // points where the evaluator failed
};

/// Evaluates the conjectured sandwich g <= e <= f on the grid; a point
/// violates only when the gap exceeds tol.abs plus the evaluator's own error
/// estimate, so quadrature noise cannot produce false positives.
BoundsReport bounds_scan(Alpha alpha, const GridSpec& grid, Tolerance tol = {});

}  // namespace mlrelax
