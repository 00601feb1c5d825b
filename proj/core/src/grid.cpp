#include "mlrelax/grid.hpp"

#include <cmath>

namespace mlrelax {

std::vector<double> make_grid(const GridSpec& spec) {
    if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi))
        throw DomainError("make_grid: endpoints must be finite");
    if (spec.count < 2) throw DomainError("make_grid: count must be >= 2");
    if (!(spec.hi > spec.lo)) throw DomainError("make_grid: hi must exceed lo");
    if (spec.spacing == Spacing::log && !(spec.lo > 0.0))
        throw DomainError("make_grid: log spacing requires lo > 0");
    if (spec.spacing == Spacing::linear && spec.lo < 0.0)
        throw DomainError("make_grid: lo must be >= 0");

    std::vector<double> pts(static_cast<size_t>(spec.count));
    const int n = spec.count - 1;
    if (spec.spacing == Spacing::log) {
        const double ratio = spec.hi / spec.lo;
        for (int i = 1; i < n; ++i)
            pts[i] = spec.lo * std::pow(ratio, static_cast<double>(i) / n);
    } else {
        const double step = (spec.hi - spec.lo) / n;
        for (int i = 1; i < n; ++i) pts[i] = spec.lo + i * step;
    }
    pts.front() = spec.lo;
    pts.back() = spec.hi;

    for (int i = 1; i < spec.count; ++i)
        if (!(pts[i] > pts[i - 1]))
            throw DomainError("make_grid: grid spacing collapsed below double resolution");
    return pts;
}

}  // namespace mlrelax
