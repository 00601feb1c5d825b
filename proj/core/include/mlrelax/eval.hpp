#pragma once

#include "mlrelax/types.hpp"

namespace mlrelax {

/// Dispatch window for eval_auto, in the variable x = t^alpha: the power
/// series is used for x <= series_max, the asymptotic expansion is tried for
/// x >= asymptotic_min (and kept only when its own error estimate meets the
/// tolerance), the spectral integral covers everything in between.
struct DispatchPolicy {
    double series_max{1.0};
    double asymptotic_min{15.0};
};

/// Partial sum of the defining alternating power series
///   e_alpha(t) = sum_n (-1)^n t^(alpha n) / Gamma(alpha n + 1),
/// stopped when the next term drops below tol.rel*|sum| + tol.abs; err_est
/// is the first omitted term (plus a summation roundoff floor). Honest only
/// where the terms decrease before convergence; eval_auto restricts its use.
EvalResult eval_series(Alpha alpha, double t, Tolerance tol = {});

/// Optimally truncated asymptotic expansion
///   e_alpha(t) ~ sum_{n>=1} (-1)^(n-1) t^(-alpha n) / Gamma(1 - alpha n),
/// terms added while their magnitude strictly decreases (N <= 100); terms
/// whose reciprocal gamma vanishes are skipped without ending the decrease
/// test. err_est is the first omitted term. Throws ConvergenceError when t
/// is too small for the asymptotic regime.
EvalResult eval_asymptotic(Alpha alpha, double t);

/// Adaptive quadrature of the spectral representation
///   e_alpha(t) = Int_0^inf exp(-r t) K_alpha(r) dr
/// under the substitution u = r^alpha, with the domain split at the kernel
/// peak and the far tail folded back through v = 1/u. Requires alpha < 1.
EvalResult eval_spectral(Alpha alpha, double t, Tolerance tol = {});

/// Regime-dispatched evaluation; alpha = 1 short-circuits to exp(-t). Falls
/// back across methods and only propagates an error when every applicable
/// method fails.
EvalResult eval_auto(Alpha alpha, double t, Tolerance tol = {}, DispatchPolicy policy = {});

struct LaplacePair {
    double lhs{};  // quadrature of Int_0^inf exp(-s t) e_alpha(t) dt
    double rhs{};  // s^(alpha-1) / (s^alpha + 1)
};

/// Numerical check of the Laplace-transform pair for real s > 0.
LaplacePair laplace_check(Alpha alpha, double s, Tolerance tol = {});

}  // namespace mlrelax
