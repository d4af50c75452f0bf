#include "vring/integrators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vring/errors.hpp"
#include "vring/fourier.hpp"

namespace vring {

namespace {

using cdouble = std::complex<double>;

int effective_band(int band_limit, int N) {
    return band_limit >= 0 ? band_limit : N / 3;
}

double sup_norm(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, std::abs(v));
    return m;
}

// RHS of the linearized complex equation.
ComplexField linear_rhs(const ComplexField& j, int band) {
    ComplexField out = fourier::second_derivative(j, band);
    const cdouble mi{0.0, -1.0};
    for (std::size_t k = 0; k < j.size(); ++k) {
        const cdouble asym = j[k] - std::conj(j[k]);
        out[k] = mi * out[k] + mi * 0.5 * asym;
    }
    return out;
}

std::vector<cdouble> component(const VectorField& f, int axis) {
    std::vector<cdouble> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        out[k] = {axis == 0 ? f[k].x : (axis == 1 ? f[k].y : f[k].z), 0.0};
    }
    return out;
}

VectorField second_derivative3(const VectorField& f, int band) {
    VectorField out(f.size());
    for (int axis = 0; axis < 3; ++axis) {
        const auto d2 = fourier::second_derivative(component(f, axis), band);
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (axis == 0) out[k].x = d2[k].real();
            if (axis == 1) out[k].y = d2[k].real();
            if (axis == 2) out[k].z = d2[k].real();
        }
    }
    return out;
}

VectorField band_filter3(const VectorField& f, int band) {
    VectorField out(f.size());
    for (int axis = 0; axis < 3; ++axis) {
        const auto filtered = fourier::band_filter(component(f, axis), band);
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (axis == 0) out[k].x = filtered[k].real();
            if (axis == 1) out[k].y = filtered[k].real();
            if (axis == 2) out[k].z = filtered[k].real();
        }
    }
    return out;
}

// RHS of the spin-chain equation, dealiased at |k| <= band.
VectorField nonlinear_rhs(const VectorField& j, int band) {
    const VectorField d2 = second_derivative3(j, band);
    VectorField out(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) out[k] = cross(j[k], d2[k]);
    return band_filter3(out, band);
}

VectorField linearized_rhs(const VectorField& delta) {
    const VectorField d2 = second_derivative3(delta, -1);
    const int N = static_cast<int>(delta.size());
    VectorField out(delta.size());
    for (int k = 0; k < N; ++k) {
        const double xi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                          static_cast<double>(N);
        out[static_cast<std::size_t>(k)] =
            cross(ring_tangent(xi),
                  delta[static_cast<std::size_t>(k)] + d2[static_cast<std::size_t>(k)]);
    }
    return out;
}

template <typename Field, typename Rhs>
Field rk4_step(const Field& y, double dt, const Rhs& rhs) {
    const Field k1 = rhs(y);
    Field tmp(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    const Field k2 = rhs(tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    const Field k3 = rhs(tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
    const Field k4 = rhs(tmp);
    Field out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

void check_uniform_norm(const VectorField& j) {
    if (j.size() < 4) throw DomainError("step_nonlinear: need at least 4 samples");
    double lo = norm(j[0]);
    double hi = lo;
    for (const auto& v : j) {
        const double n = norm(v);
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    const double mid = 0.5 * (lo + hi);
    if (hi - mid > 1e-6 || mid - lo > 1e-6) {
        throw DomainError("step_nonlinear: |j| varies by more than 1e-6 over the grid");
    }
}

long steps_for(double tau_end, double dtau) {
    if (!(dtau > 0.0)) throw DomainError("integrate: dtau must be positive");
    if (tau_end < 0.0) throw DomainError("integrate: tau_end must be >= 0");
    const double raw = tau_end / dtau;
    const long n = std::lround(raw);
    if (std::abs(raw - static_cast<double>(n)) > 1e-9 * std::max(1.0, raw)) {
        throw DomainError("integrate: dtau must divide tau_end");
    }
    return n;
}

} // namespace

ComplexField step_linear(const ComplexField& field, double dtau, int band_limit) {
    if (!(dtau > 0.0)) throw DomainError("step_linear: dtau must be positive");
    const int band = effective_band(band_limit, static_cast<int>(field.size()));
    const double before = sup_norm(field);
    ComplexField out =
        rk4_step(field, dtau, [band](const ComplexField& y) { return linear_rhs(y, band); });
    if (sup_norm(out) > 10.0 * std::max(before, 1e-300)) {
        throw StepSizeError("step_linear: field grew more than tenfold in one step");
    }
    return out;
}

VectorField step_nonlinear(const VectorField& field, double dtau, int band_limit) {
    if (!(dtau > 0.0)) throw DomainError("step_nonlinear: dtau must be positive");
    check_uniform_norm(field);
    const int band = effective_band(band_limit, static_cast<int>(field.size()));
    VectorField out = rk4_step(field, dtau,
                               [band](const VectorField& y) { return nonlinear_rhs(y, band); });
    for (std::size_t k = 0; k < field.size(); ++k) {
        const double drift = std::abs(norm(out[k]) - norm(field[k]));
        if (drift > 1e-6) {
            throw IntegrationError("step_nonlinear: pointwise norm drift " +
                                   std::to_string(drift) + " in one step");
        }
    }
    return out;
}

VectorField step_linearized_vector(const VectorField& delta, double dtau) {
    if (!(dtau > 0.0)) throw DomainError("step_linearized_vector: dtau must be positive");
    double before = 0.0;
    for (const auto& v : delta) before = std::max(before, norm(v));
    VectorField out =
        rk4_step(delta, dtau, [](const VectorField& y) { return linearized_rhs(y); });
    double after = 0.0;
    for (const auto& v : out) after = std::max(after, norm(v));
    if (after > 10.0 * std::max(before, 1e-300)) {
        throw StepSizeError("step_linearized_vector: field grew more than tenfold; "
                            "reduce dtau (needs omega(N/2) dtau < 2.8)");
    }
    return out;
}

ComplexTrajectory integrate_linear(const ComplexField& initial, double tau_end,
                                   double dtau, const IntegrateOptions& opts) {
    const long n_steps = steps_for(tau_end, dtau);
    const int band = effective_band(opts.band_limit, static_cast<int>(initial.size()));
    const long stride = std::max(1, opts.snapshot_stride);

    ComplexTrajectory traj;
    traj.dt = dtau;
    traj.grid_size = static_cast<int>(initial.size());
    traj.times.push_back(0.0);
    traj.fields.push_back(initial);

    ComplexField y = initial;
    for (long s = 1; s <= n_steps; ++s) {
        y = step_linear(y, dtau, band);
        if (s % stride == 0 || s == n_steps) {
            traj.times.push_back(static_cast<double>(s) * dtau);
            traj.fields.push_back(y);
        }
    }
    return traj;
}

VectorTrajectory integrate_nonlinear(const VectorField& initial, double tau_end,
                                     double dtau, const IntegrateOptions& opts) {
    const long n_steps = steps_for(tau_end, dtau);
    const int band = effective_band(opts.band_limit, static_cast<int>(initial.size()));
    const long stride = std::max(1, opts.snapshot_stride);

    std::vector<double> target_norm(initial.size());
    for (std::size_t k = 0; k < initial.size(); ++k) target_norm[k] = norm(initial[k]);

    VectorTrajectory traj;
    traj.dt = dtau;
    traj.grid_size = static_cast<int>(initial.size());
    traj.times.push_back(0.0);
    traj.fields.push_back(initial);

    VectorField y = initial;
    for (long s = 1; s <= n_steps; ++s) {
        y = step_nonlinear(y, dtau, band);
        bool renormed = false;
        for (std::size_t k = 0; k < y.size(); ++k) {
            const double n = norm(y[k]);
            const double drift = std::abs(n - target_norm[k]);
            traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
            if (drift > opts.drift_limit) {
                throw IntegrationError("integrate_nonlinear: norm drift " +
                                       std::to_string(drift) + " at step " +
                                       std::to_string(s));
            }
            if (drift > opts.renorm_threshold && n > 0.0) {
                y[k] = (target_norm[k] / n) * y[k];
                renormed = true;
            }
        }
        if (renormed) ++traj.renormalizations;
        if (s % stride == 0 || s == n_steps) {
            traj.times.push_back(static_cast<double>(s) * dtau);
            traj.fields.push_back(y);
        }
    }
    return traj;
}

} // namespace vring
