#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mlrelax/types.hpp"

namespace mlrelax {

/// Discrete Caputo derivative of order mu in (0,1) on a uniform grid
/// t_k = k h: product integration of the convolution integral with f taken
/// piecewise linear (the classical L1 rule). Returns the derivative at
/// t_1..t_N; first-order accurate in h for smooth f.
std::vector<double> caputo_derivative_discrete(std::span<const double> t,
                                               std::span<const double> f, double mu);

/// Discrete Riemann-Liouville derivative of order mu in (0,1): the
/// fractional integral of order 1-mu is product-integrated with f piecewise
/// linear, then differentiated by a backward difference. Returns values at
/// t_1..t_N and satisfies the discrete Caputo relation
/// RL(f) - Caputo(f) ~ f(0) t^-mu / Gamma(1-mu).
std::vector<double> rl_derivative_discrete(std::span<const double> t,
                                           std::span<const double> f, double mu);

enum class Scheme { caputo_gl, rl_gl };

const char* scheme_name(Scheme s) noexcept;

struct SolverRun {
    double alpha{};
    Scheme scheme{Scheme::caputo_gl};
    double h{};
    double horizon{};
    std::vector<std::pair<double, double>> trajectory;  // (t_k, u_k), u_0 = 1
    double max_abs_err{};                               // against eval_auto at the nodes
};

/// Implicit Gruenwald-Letnikov stepper for the fractional relaxation problem
/// with u(0+) = 1. caputo_gl discretises D*^alpha u = -u through the shifted
/// convolution of u - u0; rl_gl advances du/dt = -D^(1-alpha) u after
/// rewriting it into Caputo form plus the exact t^(alpha-1) source, which is
/// product-integrated across each step. Throws InstabilityError if the
/// discrete solution leaves (0, 1] or grows.
SolverRun solve_relaxation(Alpha alpha, double h, double horizon, Scheme scheme,
                           Tolerance tol = {});

struct ConvergencePoint {
    double h{};
    double max_abs_err{};
    double observed_order{};  // NaN for the first entry
};

/// Runs solve_relaxation over a decreasing list of step sizes and reports
/// pairwise observed orders log(err_i-1/err_i) / log(h_i-1/h_i).
std::vector<ConvergencePoint> convergence_study(Alpha alpha, std::span<const double> h_list,
                                                double horizon, Scheme scheme, Tolerance tol = {});

}  // namespace mlrelax
