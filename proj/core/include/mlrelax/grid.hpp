#pragma once

#include <vector>

#include "mlrelax/errors.hpp"

namespace mlrelax {

enum class Spacing { log, linear };

/// Evaluation abscissae: `count` points spanning [lo, hi], geometric or
/// arithmetic. Log spacing requires lo > 0.
struct GridSpec {
    double lo{};
    double hi{};
    int count{};
    Spacing spacing{Spacing::log};
};

/// Strictly increasing points with exact endpoints. Throws DomainError on an
/// invalid spec.
std::vector<double> make_grid(const GridSpec& spec);

}  // namespace mlrelax
