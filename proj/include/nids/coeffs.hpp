#pragma once

#include <cmath>
#include <stdexcept>

namespace nids {

/// Real constants of the non-isospectral DSI system. a0 is a pure phase
/// constant that drops out of the reduced equations; it is kept only so the
/// original-variable field q * exp(-2i a0 t) can be emitted on request.
struct NonisoCoefficients {
    double omega0 = 0.0;  ///< inhomogeneity strength
    double omega1 = 0.0;  ///< dilation/growth rate (1/time)
    double a1 = 0.0;      ///< drift coefficient
    double a0 = 0.0;      ///< phase constant (scaled out of the reduced system)

    void validate() const {
        if (!std::isfinite(omega0) || !std::isfinite(omega1) ||
            !std::isfinite(a1) || !std::isfinite(a0))
            throw std::invalid_argument("NonisoCoefficients: fields must be finite");
    }
};

}  // namespace nids
