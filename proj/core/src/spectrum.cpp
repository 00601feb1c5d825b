#include "mlrelax/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mlrelax/errors.hpp"
#include "mlrelax/gamma.hpp"
#include "mlrelax/quadrature.hpp"

namespace mlrelax {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_subunit(Alpha alpha, const char* who) {
    if (alpha.classical())
        throw DomainError(std::string(who) + ": kernel degenerates to a delta at alpha = 1");
}

}  // namespace

double kernel_freq(Alpha alpha, double r) {
    require_subunit(alpha, "kernel_freq");
    if (!(r > 0.0)) throw DomainError("kernel_freq: r must be > 0");
    const double a = alpha.value();
    const double s = sin_pi(a);
    const double c = cos_pi(a);
    const double y = std::pow(r, a);  // r^(2a) + 2 r^a c + 1 = (y + c)^2 + s^2
    const double den = (y + c) * (y + c) + s * s;
    return s * y / (kPi * r * den);
}

double kernel_time(Alpha alpha, double tau) {
    require_subunit(alpha, "kernel_time");
    if (!(tau > 0.0)) throw DomainError("kernel_time: tau must be > 0");
    return kernel_freq(alpha, 1.0 / tau) / (tau * tau);
}

double kernel_peak(Alpha alpha) {
    require_subunit(alpha, "kernel_peak");
    const double c = cos_pi(alpha.value());
    if (c < 0.0) return std::pow(-c, 1.0 / alpha.value());
    return 1.0;
}

double kernel_normalization(Alpha alpha, Tolerance tol) {
    require_subunit(alpha, "kernel_normalization");
    const double a = alpha.value();
    const double s = sin_pi(a);
    const double c = cos_pi(a);
    const double kappa = s / (a * kPi);

    // u = r^alpha turns K dr into kappa du / ((u+c)^2 + s^2), removing the
    // r^(alpha-1) endpoint singularity.
    auto w = [=](double u) { return kappa / ((u + c) * (u + c) + s * s); };

    const double upeak = (c < 0.0) ? -c : 1.0;
    const double body_end = 4.0 * std::max(1.0, upeak);
    std::vector<double> body{0.0, 0.5 * upeak, upeak, 2.0 * upeak, body_end};
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());

    QuadOptions opt;
    opt.rel_tol = std::max(tol.rel * 0.1, 1e-13);
    opt.abs_tol = tol.abs * 0.1;

    const QuadOutcome head = integrate_adaptive(w, body, opt);
    // Tail over [body_end, inf) via v = 1/u, which maps it onto the same
    // kernel shape on (0, 1/body_end].
    const double vtop[] = {0.0, 1.0 / body_end};
    const QuadOutcome tail = integrate_adaptive(
        [=](double v) { return kappa / ((1.0 + c * v) * (1.0 + c * v) + s * s * v * v); }, vtop,
        opt);

    const double value = head.value + tail.value;
    const double err = head.err_est + tail.err_est;
    if (!head.converged || !tail.converged) {
        const double cap = 10.0 * std::max(tol.abs, tol.rel * std::abs(value));
        if (err > cap)
            throw QuadratureError("kernel_normalization: quadrature failed to converge");
    }
    return value;
}

}  // namespace mlrelax
