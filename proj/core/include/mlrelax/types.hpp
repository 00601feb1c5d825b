#pragma once

#include <cmath>

#include "mlrelax/errors.hpp"

namespace mlrelax {

/// Order parameter of the relaxation function, restricted to (0, 1].
/// alpha = 1 is admitted as the classical-exponential reduction; the
/// spectral kernels additionally require alpha < 1 and check it themselves.
class Alpha {
  public:
    explicit Alpha(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0 || value > 1.0)
            throw DomainError("alpha must lie in (0, 1]");
    }

    double value() const noexcept { return value_; }
    bool classical() const noexcept { return value_ == 1.0; }

  private:
    double value_;
};

/// Accuracy request: target relative accuracy plus an absolute floor.
struct Tolerance {
    double rel{1e-10};
    double abs{0.0};

    Tolerance() = default;
    Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
        if (!(rel >= 1e-15 && rel <= 1e-2))
            throw DomainError("tolerance.rel must lie in [1e-15, 1e-2]");
        if (!(abs >= 0.0) || !std::isfinite(abs))
            throw DomainError("tolerance.abs must be >= 0");
    }
};

enum class Method { series, asymptotic, spectral, automatic, exponential };

const char* method_name(Method m) noexcept;

/// A function value together with an estimated absolute error and the
/// method that produced it.
struct EvalResult {
    double value{};
    double err_est{};
    Method method{Method::automatic};
};

}  // namespace mlrelax
