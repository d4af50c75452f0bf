#pragma once

#include <complex>

#include "vring/constants.hpp"
#include "vring/spectrum.hpp"
#include "vring/vec3.hpp"

namespace vring {

/// Full classical state of the perturbed ring.
///
/// The mode amplitudes are stored at O(1) size with the bookkeeping
/// parameter epsilon kept separately; formulas that need the physical
/// perturbation multiply by epsilon explicitly.  q0 is the curve base
/// point at tau = 0 (the reconstructed curve starts there, r(0) = q0,
/// whenever the closure constraints hold).  p holds the canonical
/// momentum: the transverse components are the perturbation amplitudes
/// p_x, p_y and the z component vanishes on the constraint surface.
/// lambda is the dimensionless circulation, Gamma = lambda R0^2 / t0.
struct PerturbationState {
    PhysicalConstants constants;
    ModeSpectrum spectrum{32};
    Vec3 q0;
    Vec3 p;
    double epsilon = 0.0;
    double j_phi0 = 0.0; // only the j_phi0 = 0 branch is supported
    double lambda = PhysicalConstants{}.lambda0;
};

/// p_x + i p_y.
inline std::complex<double> transverse_momentum(const PerturbationState& s) {
    return {s.p.x, s.p.y};
}

/// Circulation Gamma = lambda R0^2 / t0 carried by the state.
inline double circulation(const PerturbationState& s) {
    return s.lambda * s.constants.R0 * s.constants.R0 / s.constants.t0;
}

/// Checks the structural invariants (positive constants, j_phi0 = 0,
/// coupling between conjugate mode pairs).  Throws on violation.
void validate_state(const PerturbationState& s);

} // namespace vring
