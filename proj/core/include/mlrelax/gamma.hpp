#pragma once

namespace mlrelax {

/// Gamma function on the real line. Uses a Lanczos rational approximation
/// for x >= 0.5 and the reflection formula below. Relative accuracy is a
/// few ulp for |x| <= 170.
///
/// Throws PoleError when x is within 1e-12 of a non-positive integer and
/// OverflowError when Gamma(x) exceeds the double range.
double gamma_real(double x);

/// 1/Gamma(x), total on the reals: returns exactly 0 at non-positive
/// integers so that series terms sitting on a pole vanish instead of
/// erroring.
double recip_gamma(double x);

/// sin(pi*x) and cos(pi*x) with exact argument reduction, so that
/// sin_pi(n) == 0 for integer n.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace mlrelax
