#pragma once

#include <cmath>

#include "vring/errors.hpp"

namespace vring {

/// Oscillation frequency of perturbation mode n about the ring,
/// omega(n) = n sqrt(n^2 - 1).  Modes 0 and +-1 are zero modes.
inline double dispersion(int n) noexcept {
    if (n == 0) return 0.0;
    const double nd = static_cast<double>(n);
    return nd * std::sqrt((nd - 1.0) * (nd + 1.0));
}

/// Coupling factor between conjugate mode pairs,
/// c(n) = 2 [ n sqrt(n^2 - 1) - n^2 + 1/2 ].
///
/// Evaluated as -1 / (2 (omega(n) + n^2 - 1/2)), which is the same number
/// without the cancellation the literal form suffers at large n.
/// c(0) = 1, c(1) = -1, and |c(n)| ~ 1/(4 n^2) for n >= 2.
inline double coupling_coefficient(int n) {
    if (n < 0) throw DomainError("coupling_coefficient: n must be >= 0");
    const double nd = static_cast<double>(n);
    return -1.0 / (2.0 * (dispersion(n) + nd * nd - 0.5));
}

/// Reciprocal of c(n), used when deriving the positive-n coefficients;
/// exact form -2 (omega(n) + n^2 - 1/2) avoids dividing by a tiny c(n).
inline double inverse_coupling_coefficient(int n) {
    if (n < 0) throw DomainError("inverse_coupling_coefficient: n must be >= 0");
    const double nd = static_cast<double>(n);
    return -2.0 * (dispersion(n) + nd * nd - 0.5);
}

} // namespace vring
