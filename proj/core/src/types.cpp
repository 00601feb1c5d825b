#include "mlrelax/types.hpp"

namespace mlrelax {

const char* method_name(Method m) noexcept {
    switch (m) {
        case Method::series: return "series";
        case Method::asymptotic: return "asymptotic";
        case Method::spectral: return "spectral";
        case Method::automatic: return "auto";
        case Method::exponential: return "exponential";
    }
    return "unknown";
}

}  // namespace mlrelax
