#pragma once

#include <array>
#include <complex>
#include <vector>

#include "vring/state.hpp"
#include "vring/vec3.hpp"

namespace vring {

/// Result of testing a tangent field against the closure constraints:
/// the three Cartesian integrals of j must vanish, and in cylindrical
/// components the integrals of j_rho e^{+-i xi} and of j_z must vanish.
struct ClosureReport {
    Vec3 cartesian;                    // integral of j_k d xi, k = x,y,z
    std::complex<double> jrho_plus;    // integral of j_rho e^{+i xi} d xi
    std::complex<double> jrho_minus;   // integral of j_rho e^{-i xi} d xi
    double jz = 0.0;                   // integral of j_z d xi
    double tolerance = 0.0;            // absolute threshold used for the flags
    std::array<bool, 3> cartesian_ok{true, true, true};
    bool jrho_plus_ok = true;
    bool jrho_minus_ok = true;
    bool jz_ok = true;

    bool pass() const {
        return cartesian_ok[0] && cartesian_ok[1] && cartesian_ok[2] &&
               jrho_plus_ok && jrho_minus_ok && jz_ok;
    }
};

/// Report-only check of the closure integrals on a uniform grid, at
/// tolerance 1e-10 relative to the field size.
ClosureReport check_closure(const std::vector<Vec3>& field);

/// Sampled closed curve with its tangent field.
struct FilamentCurve {
    std::vector<double> xi;
    std::vector<Vec3> points;   // r(xi_k)
    std::vector<Vec3> tangent;  // j(xi_k), so that d r / d xi = R0 j
    double R0 = 1.0;
    double closure_violation = 0.0; // |r(2pi-) - r(0)| = R0 |closed integral of j|
    bool closed = true;
};

/// Reconstructs the physical curve at evolution time tau on an N-point grid,
///   r(xi) = q0 + tau (t0/m0) p + R0 * integral of [xi - eta] j(tau, eta) d eta,
/// with [x] the integer part of x/(2pi).  The tangent is the full field
/// j0 + epsilon * perturbation.  A closure violation beyond 1e-8 R0 clears
/// the `closed` flag instead of throwing.
FilamentCurve reconstruct_curve(const PerturbationState& state, double tau, int N);

/// Same kernel integration applied to explicit tangent samples around the
/// given center point.
FilamentCurve reconstruct_from_field(const std::vector<Vec3>& field, const Vec3& center,
                                     double R0);

} // namespace vring
