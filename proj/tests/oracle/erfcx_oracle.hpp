#pragma once

#include <cmath>

// Test-only oracle for the alpha = 1/2 closed form
//   e_{1/2}(t) = exp(t) erfc(sqrt(t)) = erfcx(sqrt(t)).
// Built on std::erfc plus the standard large-x expansion, so it shares no
// code with the evaluators under test. Relative accuracy is a few 1e-14
// across the full range used by the suites (t up to 1e5, i.e. x up to ~316).
namespace oracle {

inline double erfcx(double x) {
    if (x <= 20.0) {
        // exp(x^2) stays representable and erfc(x) >= 5e-176 here.
        return std::exp(x * x) * std::erfc(x);
    }
    // erfcx(x) = (1/(x sqrt(pi))) sum_n (-1)^n (2n-1)!!/(2x^2)^n; at x >= 20
    // twelve terms reach ~1e-17.
    const double w = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 12; ++n) {
        term *= -(2.0 * n - 1.0) / w;
        sum += term;
    }
    return sum / (x * 1.77245385090551602729816748334);
}

inline double ml_half(double t) { return erfcx(std::sqrt(t)); }

}  // namespace oracle
