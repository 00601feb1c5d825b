#pragma once

#include <functional>
#include <span>

namespace mlrelax {

struct QuadOptions {
    double rel_tol{1e-12};
    double abs_tol{0.0};
    int max_panels{4000};
};

struct QuadOutcome {
    double value{};
    double err_est{};
    bool converged{};
    int panels{};
};

/// Globally adaptive Gauss-Kronrod 7/15 integration over the panels defined
/// by consecutive `breakpoints` (sorted, at least two). The worst panel is
/// bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |integral|) or max_panels is reached; in the latter
/// case `converged` is false and the caller decides whether the estimate is
/// still usable.
QuadOutcome integrate_adaptive(const std::function<double(double)>& f,
                               std::span<const double> breakpoints,
                               const QuadOptions& opt = {});

}  // namespace mlrelax
