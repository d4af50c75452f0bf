#pragma once

#include <complex>
#include <vector>

#include "vring/dispersion.hpp"
#include "vring/spectrum.hpp"
#include "vring/state.hpp"
#include "vring/vec3.hpp"

namespace vring {

/// Closed-form evolution of the mode coefficients:
/// coeff[n] -> coeff[n] e^{i omega(n) tau}.  Moduli and the pair coupling
/// are preserved; modes 0 and +-1 are stationary.
ModeSpectrum evolve_modes(const ModeSpectrum& spectrum, double tau);

/// Same evolution computed the second way: rotate only the independent
/// coefficients and re-derive the positive side from the coupling.
/// Must agree with evolve_modes; the tests assert it.
ModeSpectrum evolve_modes_via_independent(const ModeSpectrum& spectrum, double tau);

/// Complex tangent perturbation j(tau, xi) = sum_n j_n e^{i [n xi + omega(n) tau]}
/// sampled on the N-point grid.
std::vector<std::complex<double>> complex_tangent_field(const ModeSpectrum& spectrum,
                                                        double tau, int N);

/// Cylindrical components (j_rho, j_phi0, j_z) = (Re j, 0, Im j) of the
/// perturbation amplitude.
struct CylindricalField {
    std::vector<double> rho;
    std::vector<double> z;
    double phi0 = 0.0;
};

CylindricalField cylindrical_tangent_field(const PerturbationState& state,
                                           double tau, int N);

/// Full Cartesian tangent samples j0(xi) + epsilon * perturbation(tau, xi).
std::vector<Vec3> full_tangent_samples(const PerturbationState& state,
                                       double tau, int N);

/// State with the spectrum advanced by tau (center and momentum untouched;
/// the mode flow leaves them constant).
PerturbationState evolve_state(const PerturbationState& state, double tau);

} // namespace vring
