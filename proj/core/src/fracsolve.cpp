#include "mlrelax/fracsolve.hpp"

#include <cmath>
#include <limits>

#include "mlrelax/errors.hpp"
#include "mlrelax/eval.hpp"
#include "mlrelax/gamma.hpp"

namespace mlrelax {
namespace {

double uniform_step(std::span<const double> t, std::span<const double> f, const char* who) {
    if (t.size() != f.size() || t.size() < 2)
        throw DomainError(std::string(who) + ": need at least 2 samples with matching sizes");
    const double h = t[1] - t[0];
    if (!(h > 0.0)) throw DomainError(std::string(who) + ": grid must increase");
    for (size_t k = 1; k < t.size(); ++k)
        if (std::abs((t[k] - t[k - 1]) - h) > 1e-9 * h)
            throw DomainError(std::string(who) + ": grid is not uniform");
    return h;
}

void require_order(double mu, const char* who) {
    if (!(mu > 0.0 && mu < 1.0))
        throw DomainError(std::string(who) + ": order mu must lie in (0, 1)");
}

// b_m = (m+1)^p - m^p, the product-integration weights for the kernel
// sigma^(p-1) integrated across uniform panels.
std::vector<double> panel_weights(size_t count, double p) {
    std::vector<double> b(count);
    double prev = 0.0;
    for (size_t m = 0; m < count; ++m) {
        const double next = std::pow(static_cast<double>(m + 1), p);
        b[m] = next - prev;
        prev = next;
    }
    return b;
}

// Gruenwald-Letnikov weights w_j = (-1)^j binom(alpha, j) by the stable
// recurrence w_0 = 1, w_j = w_{j-1} (1 - (alpha+1)/j).
std::vector<double> gl_weights(size_t count, double alpha) {
    std::vector<double> w(count);
    w[0] = 1.0;
    for (size_t j = 1; j < count; ++j)
        w[j] = w[j - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(j));
    return w;
}

}  // namespace

std::vector<double> caputo_derivative_discrete(std::span<const double> t,
                                               std::span<const double> f, double mu) {
    require_order(mu, "caputo_derivative_discrete");
    const double h = uniform_step(t, f, "caputo_derivative_discrete");
    const size_t n = t.size() - 1;  // derivatives at t_1..t_n

    // D*^mu f(t_k) ~ h^-mu / Gamma(2-mu) * sum_j (f_j - f_{j-1}) b_{k-j}
    const std::vector<double> b = panel_weights(n, 1.0 - mu);
    const double scale = std::pow(h, -mu) / gamma_real(2.0 - mu);

    std::vector<double> d(n);
    for (size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (size_t j = 1; j <= k; ++j) acc += (f[j] - f[j - 1]) * b[k - j];
        d[k - 1] = scale * acc;
    }
    return d;
}

std::vector<double> rl_derivative_discrete(std::span<const double> t,
                                           std::span<const double> f, double mu) {
    require_order(mu, "rl_derivative_discrete");
    const double h = uniform_step(t, f, "rl_derivative_discrete");
    const size_t n = t.size() - 1;

    // Fractional integral J^(1-mu) f at the nodes, product-integrated with f
    // piecewise linear:
    //   J_k = h^(1-mu) [ sum_j f_{j-1} A_{k-j} + (f_j - f_{j-1}) C_{k-j} ]
    // with A_m = ((m+1)^(1-mu) - m^(1-mu)) / Gamma(2-mu) and the first-moment
    // part C_m = (m+1) A_m - ((m+1)^(2-mu) - m^(2-mu)) / Gamma(3-mu).
    const std::vector<double> bA = panel_weights(n, 1.0 - mu);
    const std::vector<double> bB = panel_weights(n, 2.0 - mu);
    const double gA = gamma_real(2.0 - mu);
    const double gB = gamma_real(3.0 - mu);

    std::vector<double> integral(n + 1, 0.0);
    for (size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (size_t j = 1; j <= k; ++j) {
            const size_t m = k - j;
            const double A = bA[m] / gA;
            const double C = (m + 1) * A - bB[m] / gB;
            acc += f[j - 1] * A + (f[j] - f[j - 1]) * C;
        }
        integral[k] = std::pow(h, 1.0 - mu) * acc;
    }

    // D^mu f = d/dt J^(1-mu) f, backward-differenced.
    std::vector<double> d(n);
    for (size_t k = 1; k <= n; ++k) d[k - 1] = (integral[k] - integral[k - 1]) / h;
    return d;
}

const char* scheme_name(Scheme s) noexcept {
    return s == Scheme::caputo_gl ? "caputo_gl" : "rl_gl";
}

SolverRun solve_relaxation(Alpha alpha, double h, double horizon, Scheme scheme, Tolerance tol) {
    if (!(h > 0.0) || !(horizon > 0.0)) throw DomainError("solve_relaxation: h, horizon > 0");
    if (!(h <= horizon / 10.0))
        throw DomainError("solve_relaxation: need h <= horizon/10");

    const double a = alpha.value();
    const size_t n = static_cast<size_t>(std::llround(horizon / h));
    const double u0 = 1.0;

    SolverRun run;
    run.alpha = a;
    run.scheme = scheme;
    run.h = h;
    run.horizon = horizon;
    run.trajectory.reserve(n + 1);
    run.trajectory.emplace_back(0.0, u0);

    std::vector<double> u(n + 1);
    u[0] = u0;

    if (scheme == Scheme::caputo_gl) {
        // h^-a sum_j w_j (u_{k-j} - u0) = -u_k, current term implicit:
        //   u_k = (u0 W_k - sum_{j>=1} w_j u_{k-j}) / (1 + h^a)
        const std::vector<double> w = gl_weights(n + 1, a);
        const double ha = std::pow(h, a);
        double wsum = w[0];
        for (size_t k = 1; k <= n; ++k) {
            wsum += w[k];
            double conv = 0.0;
            for (size_t j = 1; j <= k; ++j) conv += w[j] * u[k - j];
            u[k] = (u0 * wsum - conv) / (1.0 + ha);
        }
    } else {
        // du/dt = -D^(1-a) u, rewritten through the Caputo relation as
        //   u' + D*^(1-a) u = -u0 t^(a-1)/Gamma(a),
        // with the singular source averaged exactly over each step.
        const double mu = 1.0 - a;
        const std::vector<double> w = gl_weights(n + 1, mu);
        const double hm = std::pow(h, -mu);
        const double g1a = gamma_real(1.0 + a);
        double prev_ta = 0.0;
        for (size_t k = 1; k <= n; ++k) {
            const double ta = std::pow(k * h, a);
            const double source = u0 * (ta - prev_ta) / (h * g1a);
            prev_ta = ta;
            double conv = 0.0;
            for (size_t j = 1; j <= k; ++j) conv += w[j] * (u[k - j] - u0);
            // Solve (u_k - u_{k-1})/h + hm [ (u_k - u0) + conv ] = -source.
            u[k] = (u[k - 1] / h + hm * (u0 - conv) - source) / (1.0 / h + hm);
        }
    }

    double max_err = 0.0;
    for (size_t k = 1; k <= n; ++k) {
        const double tk = k * h;
        if (u[k] < 0.0 || u[k] > u[k - 1] + 1e-14)
            throw InstabilityError("solve_relaxation: discrete solution lost monotonicity");
        run.trajectory.emplace_back(tk, u[k]);
        max_err = std::max(max_err, std::abs(u[k] - eval_auto(alpha, tk, tol).value));
    }
    run.max_abs_err = max_err;
    return run;
}

std::vector<ConvergencePoint> convergence_study(Alpha alpha, std::span<const double> h_list,
                                                double horizon, Scheme scheme, Tolerance tol) {
    if (h_list.size() < 3)
        throw DomainError("convergence_study: need at least 3 step sizes");
    for (size_t i = 1; i < h_list.size(); ++i)
        if (!(h_list[i] < h_list[i - 1]))
            throw DomainError("convergence_study: step sizes must decrease");

    std::vector<ConvergencePoint> out;
    out.reserve(h_list.size());
    for (size_t i = 0; i < h_list.size(); ++i) {
        const SolverRun run = solve_relaxation(alpha, h_list[i], horizon, scheme, tol);
        ConvergencePoint p;
        p.h = h_list[i];
        p.max_abs_err = run.max_abs_err;
        p.observed_order = std::numeric_limits<double>::quiet_NaN();
        if (i > 0) {
            const double r = out[i - 1].max_abs_err / p.max_abs_err;
            p.observed_order = std::log(r) / std::log(h_list[i - 1] / h_list[i]);
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace mlrelax
