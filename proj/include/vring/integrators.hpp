#pragma once

#include <complex>
#include <vector>

#include "vring/vec3.hpp"

namespace vring {

/// Snapshot record of a time-stepped run.
template <typename Field>
struct Trajectory {
    std::vector<double> times;
    std::vector<Field> fields;
    double dt = 0.0;
    int grid_size = 0;
    long renormalizations = 0;  // nonlinear runs only
    double max_norm_drift = 0.0;
};

using ComplexField = std::vector<std::complex<double>>;
using VectorField = std::vector<Vec3>;

using ComplexTrajectory = Trajectory<ComplexField>;
using VectorTrajectory = Trajectory<VectorField>;

/// One RK4 step of the linearized complex equation
///   d j / d tau = -i d^2 j / d xi^2 - (i/2)(j - conj j)
/// with spectral evaluation of the second derivative restricted to
/// |k| <= band_limit (default N/3; pass n >= N/2 to disable).  Throws
/// StepSizeError when the field grows more than tenfold in one step.
ComplexField step_linear(const ComplexField& field, double dtau, int band_limit = -1);

/// One RK4 step of the full spin-chain equation  d j / d tau = j x d^2 j / d xi^2.
/// Requires the pointwise norms |j(xi_k)| to sit within 1e-6 of a common
/// constant.  The RHS is band-filtered at |k| <= band_limit (default N/3),
/// the usual 2/3 dealiasing for the quadratic term.
VectorField step_nonlinear(const VectorField& field, double dtau, int band_limit = -1);

/// One RK4 step of the linearized equation in vector form,
///   d delta / d tau = j0 x (delta + d^2 delta / d xi^2),
/// used to cross-check the complex form and the j_phi conservation law.
/// Runs unfiltered: the equation is linear (no aliasing), and a band cut in
/// Cartesian components would split cylindrical mode pairs at the boundary
/// and feed a slow instability.  Stability requires omega(N/2) dtau < 2.8.
VectorField step_linearized_vector(const VectorField& delta, double dtau);

struct IntegrateOptions {
    int snapshot_stride = 1;  // record every k-th step (initial and final always kept)
    int band_limit = -1;      // -1: N/3 default
    double renorm_threshold = 1e-10; // nonlinear: renormalize |j| past this drift
    double drift_limit = 1e-6;       // nonlinear: error out past this drift per step
};

/// Fixed-step RK4 run of the linearized complex equation; deterministic for
/// fixed inputs.  dtau must divide tau_end within rounding.
ComplexTrajectory integrate_linear(const ComplexField& initial, double tau_end,
                                   double dtau, const IntegrateOptions& opts = {});

/// Fixed-step RK4 run of the full spin-chain equation.  Pointwise norms are
/// monitored every step: drift past opts.renorm_threshold is renormalized
/// away (and counted), drift past opts.drift_limit aborts the run.
VectorTrajectory integrate_nonlinear(const VectorField& initial, double tau_end,
                                     double dtau, const IntegrateOptions& opts = {});

} // namespace vring
