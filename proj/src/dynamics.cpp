#include "vring/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "vring/errors.hpp"

namespace vring {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

ModeSpectrum evolve_modes(const ModeSpectrum& spectrum, double tau) {
    ModeSpectrum out(spectrum.n_max());
    for (int n = -spectrum.n_max(); n <= spectrum.n_max(); ++n) {
        out.set_coeff(n, spectrum.coeff(n) * std::polar(1.0, dispersion(n) * tau));
    }
    return out;
}

ModeSpectrum evolve_modes_via_independent(const ModeSpectrum& spectrum, double tau) {
    ModeSpectrum rotated(spectrum.n_max());
    rotated.set_coeff(0, spectrum.coeff(0));
    for (int n = 1; n <= spectrum.n_max(); ++n) {
        rotated.set_coeff(-n, spectrum.coeff(-n) * std::polar(1.0, dispersion(-n) * tau));
    }
    return enforce_coupling(rotated);
}

std::vector<std::complex<double>> complex_tangent_field(const ModeSpectrum& spectrum,
                                                        double tau, int N) {
    // phase-advance the coefficients, then evaluate the spatial series
    return samples_from_modes(evolve_modes(spectrum, tau), N);
}

CylindricalField cylindrical_tangent_field(const PerturbationState& state, double tau,
                                           int N) {
    const auto jc = complex_tangent_field(state.spectrum, tau, N);
    CylindricalField out;
    out.rho.resize(jc.size());
    out.z.resize(jc.size());
    out.phi0 = state.j_phi0;
    for (std::size_t k = 0; k < jc.size(); ++k) {
        out.rho[k] = jc[k].real();
        out.z[k] = jc[k].imag();
    }
    return out;
}

std::vector<Vec3> full_tangent_samples(const PerturbationState& state, double tau,
                                       int N) {
    const auto jc = complex_tangent_field(state.spectrum, tau, N);
    std::vector<Vec3> out(jc.size());
    for (int k = 0; k < N; ++k) {
        const double xi = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
        const Vec3 perturbation = jc[static_cast<std::size_t>(k)].real() * e_rho(xi) +
                                  state.j_phi0 * e_phi(xi) +
                                  jc[static_cast<std::size_t>(k)].imag() * e_z();
        out[static_cast<std::size_t>(k)] = ring_tangent(xi) + state.epsilon * perturbation;
    }
    return out;
}

PerturbationState evolve_state(const PerturbationState& state, double tau) {
    PerturbationState out = state;
    out.spectrum = evolve_modes(state.spectrum, tau);
    return out;
}

} // namespace vring
