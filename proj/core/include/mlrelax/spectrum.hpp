#pragma once

#include "mlrelax/types.hpp"

namespace mlrelax {

struct SpectralPoint {
    double abscissa{};  // frequency r or relaxation time tau
    double density{};   // K_alpha(r) or H_alpha(tau), always >= 0
};

/// Frequency spectrum K_alpha(r) of the relaxation function: the branch-cut
/// density in e_alpha(t) = Int_0^inf exp(-r t) K_alpha(r) dr,
///
///   K_alpha(r) = (1/pi) r^(alpha-1) sin(alpha pi)
///                / (r^(2 alpha) + 2 r^alpha cos(alpha pi) + 1).
///
/// Requires 0 < alpha < 1 and r > 0.
double kernel_freq(Alpha alpha, double r);

/// Relaxation-time spectrum H_alpha(tau) = tau^-2 K_alpha(1/tau); computed
/// through that transform, which coincides with the closed form above with
/// r replaced by tau.
double kernel_time(Alpha alpha, double tau);

/// Abscissa of the kernel's resonant maximum: the minimiser of the
/// denominator, r* = (-cos(alpha pi))^(1/alpha) for alpha > 1/2, else 1 as a
/// neutral split point. Used to seed quadrature panels.
double kernel_peak(Alpha alpha);

/// Adaptive quadrature of Int_0^inf K_alpha(r) dr under the substitution
/// u = r^alpha. Equals 1 since e_alpha(0) = 1.
double kernel_normalization(Alpha alpha, Tolerance tol = {});

}  // namespace mlrelax
