#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "vring/curve.hpp"
#include "vring/state.hpp"
#include "vring/vec3.hpp"

namespace vring {

/// Hydrodynamic impulse data.  `f` is the dimensionless double integral
///   f = (1/2) int int [xi - eta] j(eta) x j(xi) d xi d eta,
/// `f_perp` the complex form of the single-integral reduction
///   f_perp = int j_z(xi) e_phi(xi) d xi,
/// and the momentum-level fields are filled by momentum():
///   p = (m0 Gamma / R0) f,   p_perp = (2 pi m0 Gamma / R0) j_{-1}.
struct ImpulseDecomposition {
    Vec3 f;
    std::complex<double> f_perp;
    double mismatch = 0.0;  // |transverse(f) + f_perp|, the dual-route residual

    Vec3 p;
    std::complex<double> p_perp;
    double p_parallel = 0.0;
    double Gamma = 0.0;
    double lambda = 0.0;
};

/// Evaluates both impulse routes on a sampled tangent field.
///
/// The double integral uses the direct O(N^2) kernel quadrature at the
/// full and half grids with one Richardson step (the quadrature error is
/// a clean h^2 series for smooth periodic fields, so the pair is accurate
/// to ~h^4).  For a perturbed-ring field the transverse part of f must
/// equal -f_perp up to the quadratic remainder; a larger mismatch signals
/// a closure violation and throws ConsistencyError.  N must be even and
/// at least 64.
ImpulseDecomposition impulse_f(const std::vector<Vec3>& field, double tol = 1e-8);

/// Physical momentum of the state: p = (m0 Gamma / R0) f evaluated on the
/// full tangent field at tau = 0, and the transverse perturbation amplitude
/// p_perp = (2 pi m0 Gamma / R0) j_{-1}.
ImpulseDecomposition momentum(const PerturbationState& state, int N = 512);

struct CirculationRecovery {
    double lambda = 0.0;
    double Gamma = 0.0;
};

/// Recovers (lambda, Gamma) from p = 2 pi lambda p0 j_{-1}.  Throws
/// CirculationError when either input vanishes (circulation undetermined)
/// and ConstraintError when Phi_0 != 0 within tolerance.
CirculationRecovery recover_circulation(std::complex<double> p_complex,
                                        std::complex<double> j_minus1,
                                        const PhysicalConstants& constants,
                                        double tol = 1e-10);

/// The three constraints evaluated on a state at evolution time tau.
/// Phi_0 = p conj(j_{-1}) - conj(p) j_{-1} is purely imaginary and is
/// reported through its imaginary part.  Phi_2 uses the center trajectory
/// q_z(tau) = q0_z + tau (t0/m0) p_z + R0 tau; the R0 tau drift is the
/// translation of the unperturbed ring that the constraint pair fixes.
struct ConstraintReport {
    double phi0 = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    std::complex<double> phi0_raw;
    std::optional<double> lambda_recovered;
    std::optional<double> Gamma_recovered;
};

ConstraintReport constraints(const PerturbationState& state, double tau);

/// Internal (excitation) energy plus kinetic term of the planar momentum:
///   H0 = |p_perp|^2 / (2 m0) + E0 sum_{n>1} |j_{-n}|^2 n sqrt(n^2-1).
/// Mode -1 is canonical but carries no internal energy.
double hamiltonian_h0(const PerturbationState& state);

/// H = H0 + ell * Phi0 with the purely imaginary constraint entering
/// through its imaginary part; ell defaults to 0 where H == H0.
double hamiltonian(const PerturbationState& state, double ell = 0.0);

/// Point of the canonical phase space: the particle pair (q, p), the real
/// zero mode j_0 (it annulates every bracket) and the independent modes
/// j_{-1} ... j_{-n_max}.
struct PhasePoint {
    Vec3 q;
    Vec3 p;
    double j0 = 0.0;
    std::vector<std::complex<double>> j_neg;
};

PhasePoint phase_point(const PerturbationState& state);

using Observable = std::function<std::complex<double>(const PhasePoint&)>;

/// Numerical Poisson bracket with the sign convention {p_i, q_j} = +delta_ij
/// of the underlying structure, and
///   {A,B} = sum_i (dA/dp_i dB/dq_i - dA/dq_i dB/dp_i)
///         + (i / E0 t0) sum_{n>=1} (dA/dj_{-n} dB/dconj j_{-n}
///                                   - dA/dconj j_{-n} dB/dj_{-n}).
/// Gradients are central differences with step 1e-6 max(1,|coordinate|);
/// complex coordinates are handled through Wirtinger derivatives.
std::complex<double> poisson_bracket(const Observable& A, const Observable& B,
                                     const PhasePoint& at,
                                     const PhysicalConstants& constants);

// Ready-made observables for the bracket.
Observable observable_h0(const PhysicalConstants& constants);
Observable observable_phi0();
Observable observable_phi0_imag();
Observable observable_phi2(double tau, double R0);
Observable observable_q(int axis);
Observable observable_p(int axis);
/// j(tau, xi) evaluated from the phase point (positive side re-derived).
Observable observable_field_value(double tau, double xi);

struct HamiltonReport {
    double max_error_dq = 0.0;      // {H0,q_i} vs p_i/m0
    double max_error_dp = 0.0;      // {H0,p_i} vs 0
    double max_error_series = 0.0;  // bracket {H0, j(tau,xi)} vs explicit series
    double max_error_fd = 0.0;      // finite-difference dj/dt vs series
    bool ok = false;
};

/// Checks the Hamilton equations at tau_probe: the particle pair exactly,
/// and {H0, j(tau,xi)} against both the explicit mode series and the
/// finite-difference time derivative of the closed-form flow at
/// `points` sample locations (tolerance 1e-6).
HamiltonReport verify_hamilton_equations(const PerturbationState& state,
                                         double tau_probe, int points = 10,
                                         unsigned seed = 12345);

/// Canonical energy of the curve with the self-interaction window cut out:
///   E(delta) = Gamma^2/(8 pi) int int_{|xi-xi'|_per >= delta}
///              (dr/dxi . dr/dxi') / |r(xi) - r(xi')| d xi d xi'.
/// Diverges logarithmically as delta -> 0.  delta below twice the grid
/// spacing is a ResolutionError.
double canonical_energy_cutoff(const FilamentCurve& curve, double Gamma, double delta);

/// E(delta) for several cutoffs in one O(N^2) pass.
std::vector<double> canonical_energy_profile(const FilamentCurve& curve, double Gamma,
                                             const std::vector<double>& deltas);

} // namespace vring
