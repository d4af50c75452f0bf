#include "vring/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "vring/dispersion.hpp"
#include "vring/dynamics.hpp"
#include "vring/errors.hpp"
#include "vring/fourier.hpp"

namespace vring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using cdouble = std::complex<double>;

// Plain kernel quadrature of f = 1/2 integral integral [xi-eta] j(eta) x j(xi),
// on every stride-th sample.
Vec3 kernel_double_sum(const std::vector<Vec3>& field, int stride) {
    const int N = static_cast<int>(field.size()) / stride;
    const double h = kTwoPi / static_cast<double>(N);
    Vec3 acc;
    for (int k = 0; k < N; ++k) {
        const Vec3& jk = field[static_cast<std::size_t>(k * stride)];
        Vec3 row;
        for (int l = k + 1; l < N; ++l) {
            row += cross(field[static_cast<std::size_t>(l * stride)], jk);
        }
        acc += row;
    }
    return -0.5 * h * h * acc;
}

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) throw DifferentiationError(std::string(what) + ": non-finite gradient");
    return v;
}

struct Gradient {
    cdouble dq[3];
    cdouble dp[3];
    std::vector<cdouble> dj;   // d/d j_{-n}
    std::vector<cdouble> djc;  // d/d conj j_{-n}
};

double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

Gradient gradient(const Observable& A, const PhasePoint& at) {
    Gradient g;
    auto central = [&](auto set_coord, double x0) -> cdouble {
        const double h = fd_step(x0);
        PhasePoint hi = at;
        PhasePoint lo = at;
        set_coord(hi, x0 + h);
        set_coord(lo, x0 - h);
        const cdouble d = (A(hi) - A(lo)) / (2.0 * h);
        finite_or_throw(d.real(), "poisson_bracket");
        finite_or_throw(d.imag(), "poisson_bracket");
        return d;
    };

    for (int i = 0; i < 3; ++i) {
        g.dq[i] = central(
            [i](PhasePoint& pp, double v) { (i == 0 ? pp.q.x : i == 1 ? pp.q.y : pp.q.z) = v; },
            i == 0 ? at.q.x : i == 1 ? at.q.y : at.q.z);
        g.dp[i] = central(
            [i](PhasePoint& pp, double v) { (i == 0 ? pp.p.x : i == 1 ? pp.p.y : pp.p.z) = v; },
            i == 0 ? at.p.x : i == 1 ? at.p.y : at.p.z);
    }

    const std::size_t m = at.j_neg.size();
    g.dj.resize(m);
    g.djc.resize(m);
    for (std::size_t n = 0; n < m; ++n) {
        const cdouble du = central(
            [n](PhasePoint& pp, double v) { pp.j_neg[n].real(v); }, at.j_neg[n].real());
        const cdouble dv = central(
            [n](PhasePoint& pp, double v) { pp.j_neg[n].imag(v); }, at.j_neg[n].imag());
        const cdouble iu{0.0, 1.0};
        g.dj[n] = 0.5 * (du - iu * dv);   // Wirtinger d/dj
        g.djc[n] = 0.5 * (du + iu * dv);  // Wirtinger d/dconj j
    }
    return g;
}

ModeSpectrum spectrum_from_phase(const PhasePoint& pp) {
    const int n_max = std::max<std::size_t>(pp.j_neg.size(), 1);
    ModeSpectrum s(static_cast<int>(n_max));
    s.set_coeff(0, {pp.j0, 0.0});
    for (std::size_t n = 0; n < pp.j_neg.size(); ++n) {
        s.set_coeff(-static_cast<int>(n + 1), pp.j_neg[n]);
    }
    return enforce_coupling(s);
}

} // namespace

ImpulseDecomposition impulse_f(const std::vector<Vec3>& field, double tol) {
    const int N = static_cast<int>(field.size());
    if (N < 64 || N % 2 != 0) {
        throw ResolutionError("impulse_f: need an even grid with N >= 64");
    }
    const double h = kTwoPi / static_cast<double>(N);

    // one Richardson step over the direct kernel sums: the quadrature error
    // is a pure h^2 series for smooth periodic fields
    const Vec3 fine = kernel_double_sum(field, 1);
    const Vec3 coarse = kernel_double_sum(field, 2);
    ImpulseDecomposition out;
    out.f = (1.0 / 3.0) * (4.0 * fine - coarse);

    cdouble fp{0.0, 0.0};
    double dev = 0.0;
    for (int k = 0; k < N; ++k) {
        const double xi = h * static_cast<double>(k);
        const Vec3& j = field[static_cast<std::size_t>(k)];
        const Vec3 ephi = e_phi(xi);
        fp += h * j.z * cdouble{ephi.x, ephi.y};
        dev = std::max(dev, norm(j - ring_tangent(xi)));
    }
    out.f_perp = fp;

    // For j = j0 + perturbation the transverse double integral must cancel
    // f_perp up to the quadratic remainder of the reduction, which is bounded
    // by ~pi^2 dev^2.  Anything larger signals a closure violation.
    out.mismatch = std::abs(cdouble{out.f.x, out.f.y} + fp);
    const double allowance = tol + 20.0 * dev * dev;
    if (out.mismatch > allowance) {
        throw ConsistencyError("impulse_f: double-integral and reduced forms disagree by " +
                               std::to_string(out.mismatch) +
                               " (allowance " + std::to_string(allowance) + ")");
    }
    return out;
}

ImpulseDecomposition momentum(const PerturbationState& state, int N) {
    const double Gamma = circulation(state);
    ImpulseDecomposition d = impulse_f(full_tangent_samples(state, 0.0, N));
    const double scale = state.constants.m0 * Gamma / state.constants.R0;
    d.p = scale * d.f;
    d.p_perp = 2.0 * std::numbers::pi * scale * state.spectrum.coeff(-1);
    d.p_parallel = d.p.z;
    d.Gamma = Gamma;
    d.lambda = state.lambda;
    return d;
}

CirculationRecovery recover_circulation(std::complex<double> p_complex,
                                        std::complex<double> j_minus1,
                                        const PhysicalConstants& constants, double tol) {
    const double pn = std::abs(p_complex);
    const double jn = std::abs(j_minus1);
    if (pn == 0.0 || jn == 0.0) {
        throw CirculationError("recover_circulation: undetermined at zero p or j_{-1}");
    }
    const cdouble phi0 = p_complex * std::conj(j_minus1) - std::conj(p_complex) * j_minus1;
    if (std::abs(phi0) > tol * 2.0 * pn * jn) {
        throw ConstraintError("recover_circulation: Phi_0 != 0, state is off the "
                              "constraint surface");
    }
    CirculationRecovery out;
    const double magnitude = pn / (2.0 * std::numbers::pi * constants.p0 * jn);
    // sign fixed by p = 2 pi lambda p0 j_{-1}
    const double alignment = (p_complex * std::conj(j_minus1)).real();
    out.lambda = alignment >= 0.0 ? magnitude : -magnitude;
    out.Gamma = out.lambda * constants.R0 * constants.R0 / constants.t0;
    return out;
}

ConstraintReport constraints(const PerturbationState& state, double tau) {
    ConstraintReport r;
    const cdouble p = transverse_momentum(state);
    const cdouble j1 = state.spectrum.coeff(-1);
    r.phi0_raw = p * std::conj(j1) - std::conj(p) * j1;
    r.phi0 = r.phi0_raw.imag();
    r.phi1 = state.p.z;
    const double qz = state.q0.z + tau * (state.constants.t0 / state.constants.m0) * state.p.z +
                      state.constants.R0 * tau;
    r.phi2 = qz - state.constants.R0 * tau;
    if (std::abs(p) > 0.0 && std::abs(j1) > 0.0 && std::abs(r.phi0_raw) <= 1e-10 * 2.0 * std::abs(p) * std::abs(j1)) {
        const auto rec = recover_circulation(p, j1, state.constants);
        r.lambda_recovered = rec.lambda;
        r.Gamma_recovered = rec.Gamma;
    }
    return r;
}

double hamiltonian_h0(const PerturbationState& state) {
    const cdouble p = transverse_momentum(state);
    double internal = 0.0;
    for (int n = 2; n <= state.spectrum.n_max(); ++n) {
        internal += std::norm(state.spectrum.coeff(-n)) * dispersion(n);
    }
    return std::norm(p) / (2.0 * state.constants.m0) + state.constants.E0 * internal;
}

double hamiltonian(const PerturbationState& state, double ell) {
    return hamiltonian_h0(state) + ell * constraints(state, 0.0).phi0;
}

PhasePoint phase_point(const PerturbationState& state) {
    PhasePoint pp;
    pp.q = state.q0;
    pp.p = state.p;
    pp.j0 = state.spectrum.coeff(0).real();
    pp.j_neg.resize(static_cast<std::size_t>(state.spectrum.n_max()));
    for (int n = 1; n <= state.spectrum.n_max(); ++n) {
        pp.j_neg[static_cast<std::size_t>(n - 1)] = state.spectrum.coeff(-n);
    }
    return pp;
}

std::complex<double> poisson_bracket(const Observable& A, const Observable& B,
                                     const PhasePoint& at,
                                     const PhysicalConstants& constants) {
    const Gradient gA = gradient(A, at);
    const Gradient gB = gradient(B, at);

    cdouble particle{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        particle += gA.dp[i] * gB.dq[i] - gA.dq[i] * gB.dp[i];
    }
    cdouble internal{0.0, 0.0};
    for (std::size_t n = 0; n < gA.dj.size(); ++n) {
        internal += gA.dj[n] * gB.djc[n] - gA.djc[n] * gB.dj[n];
    }
    const cdouble iu{0.0, 1.0};
    return particle + iu / (constants.E0 * constants.t0) * internal;
}

Observable observable_h0(const PhysicalConstants& constants) {
    return [constants](const PhasePoint& pp) -> cdouble {
        double internal = 0.0;
        for (std::size_t n = 1; n < pp.j_neg.size(); ++n) {
            internal += std::norm(pp.j_neg[n]) * dispersion(static_cast<int>(n + 1));
        }
        const cdouble p{pp.p.x, pp.p.y};
        return std::norm(p) / (2.0 * constants.m0) + constants.E0 * internal;
    };
}

Observable observable_phi0() {
    return [](const PhasePoint& pp) -> cdouble {
        if (pp.j_neg.empty()) return {0.0, 0.0};
        const cdouble p{pp.p.x, pp.p.y};
        return p * std::conj(pp.j_neg[0]) - std::conj(p) * pp.j_neg[0];
    };
}

Observable observable_phi0_imag() {
    return [](const PhasePoint& pp) -> cdouble {
        if (pp.j_neg.empty()) return {0.0, 0.0};
        const cdouble p{pp.p.x, pp.p.y};
        return (p * std::conj(pp.j_neg[0]) - std::conj(p) * pp.j_neg[0]).imag();
    };
}

Observable observable_phi2(double tau, double R0) {
    return [tau, R0](const PhasePoint& pp) -> cdouble { return pp.q.z - R0 * tau; };
}

Observable observable_q(int axis) {
    return [axis](const PhasePoint& pp) -> cdouble {
        return axis == 0 ? pp.q.x : axis == 1 ? pp.q.y : pp.q.z;
    };
}

Observable observable_p(int axis) {
    return [axis](const PhasePoint& pp) -> cdouble {
        return axis == 0 ? pp.p.x : axis == 1 ? pp.p.y : pp.p.z;
    };
}

Observable observable_field_value(double tau, double xi) {
    return [tau, xi](const PhasePoint& pp) -> cdouble {
        const ModeSpectrum s = spectrum_from_phase(pp);
        cdouble acc{0.0, 0.0};
        for (int n = -s.n_max(); n <= s.n_max(); ++n) {
            acc += s.coeff(n) *
                   std::polar(1.0, static_cast<double>(n) * xi + dispersion(n) * tau);
        }
        return acc;
    };
}

HamiltonReport verify_hamilton_equations(const PerturbationState& state,
                                         double tau_probe, int points, unsigned seed) {
    HamiltonReport rep;
    const PhasePoint at = phase_point(state);
    const PhysicalConstants& c = state.constants;
    const Observable H0 = observable_h0(c);

    // dq/dt = {H0, q} = p/m0 (z component vanishes: H0 carries p_perp only)
    const double expected_dq[3] = {state.p.x / c.m0, state.p.y / c.m0, 0.0};
    for (int i = 0; i < 3; ++i) {
        const cdouble dq = poisson_bracket(H0, observable_q(i), at, c);
        const cdouble dp = poisson_bracket(H0, observable_p(i), at, c);
        rep.max_error_dq =
            std::max(rep.max_error_dq, std::abs(dq - cdouble{expected_dq[i], 0.0}));
        rep.max_error_dp = std::max(rep.max_error_dp, std::abs(dp));
    }

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> xi_dist(0.0, kTwoPi);
    std::uniform_real_distribution<double> tau_dist(0.0, std::max(tau_probe, 1e-9));
    const double h_tau = 1e-6; // truncation ~ omega^3 h^2 stays under tolerance
    for (int s = 0; s < points; ++s) {
        const double xi = xi_dist(rng);
        const double tau = tau_dist(rng);

        cdouble series{0.0, 0.0};
        for (int n = -state.spectrum.n_max(); n <= state.spectrum.n_max(); ++n) {
            if (std::abs(n) <= 1) continue;
            series += state.spectrum.coeff(n) * dispersion(n) *
                      std::polar(1.0, static_cast<double>(n) * xi + dispersion(n) * tau);
        }
        series *= cdouble{0.0, 1.0} / c.t0;

        const cdouble bracket =
            poisson_bracket(H0, observable_field_value(tau, xi), at, c);
        rep.max_error_series = std::max(rep.max_error_series, std::abs(bracket - series));

        auto field_at = [&](double t) -> cdouble {
            cdouble acc{0.0, 0.0};
            for (int n = -state.spectrum.n_max(); n <= state.spectrum.n_max(); ++n) {
                acc += state.spectrum.coeff(n) *
                       std::polar(1.0, static_cast<double>(n) * xi + dispersion(n) * t);
            }
            return acc;
        };
        const cdouble fd = (field_at(tau + h_tau) - field_at(tau - h_tau)) /
                           (2.0 * h_tau * c.t0);
        rep.max_error_fd = std::max(rep.max_error_fd, std::abs(fd - series));
    }

    rep.ok = rep.max_error_dq <= 1e-8 && rep.max_error_dp <= 1e-8 &&
             rep.max_error_series <= 1e-6 && rep.max_error_fd <= 1e-6;
    return rep;
}

std::vector<double> canonical_energy_profile(const FilamentCurve& curve, double Gamma,
                                             const std::vector<double>& deltas) {
    const int N = static_cast<int>(curve.points.size());
    if (N < 4) throw DomainError("canonical_energy: curve too coarse");
    const double h = kTwoPi / static_cast<double>(N);
    for (double d : deltas) {
        if (d < 2.0 * h) {
            throw ResolutionError("canonical_energy: delta below twice the grid spacing");
        }
    }
    if (!curve.closed) throw DomainError("canonical_energy: curve does not close");

    std::vector<double> sorted = deltas; // descending: prefix sums add pairs
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    // dr/dxi via the spectral derivative of the points
    std::vector<Vec3> dr(curve.points.size());
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<cdouble> comp(curve.points.size());
        for (std::size_t k = 0; k < curve.points.size(); ++k) {
            const Vec3& v = curve.points[k];
            comp[k] = {axis == 0 ? v.x : (axis == 1 ? v.y : v.z), 0.0};
        }
        const auto d = fourier::derivative(comp);
        for (std::size_t k = 0; k < curve.points.size(); ++k) {
            if (axis == 0) dr[k].x = d[k].real();
            if (axis == 1) dr[k].y = d[k].real();
            if (axis == 2) dr[k].z = d[k].real();
        }
    }

    const std::size_t m = sorted.size();
    std::vector<double> bucket(m, 0.0);
    for (int k = 0; k < N; ++k) {
        std::vector<double> row(m, 0.0);
        for (int l = k + 1; l < N; ++l) {
            const double sep = h * static_cast<double>(l - k);
            const double pdist = std::min(sep, kTwoPi - sep);
            // descending deltas: first bucket whose cutoff admits the pair
            std::size_t idx = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (pdist >= sorted[i]) {
                    idx = i;
                    break;
                }
            }
            if (idx == m) continue;
            const double distance = norm(curve.points[static_cast<std::size_t>(k)] -
                                         curve.points[static_cast<std::size_t>(l)]);
            row[idx] += dot(dr[static_cast<std::size_t>(k)], dr[static_cast<std::size_t>(l)]) /
                        distance;
        }
        for (std::size_t i = 0; i < m; ++i) bucket[i] += row[i];
    }

    const double scale = Gamma * Gamma / (8.0 * std::numbers::pi) * h * h * 2.0; // pairs
    std::vector<double> out(deltas.size(), 0.0);
    double running = 0.0;
    std::vector<double> prefix(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        running += bucket[i];
        prefix[i] = running * scale;
    }
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            if (sorted[i] == deltas[j]) out[j] = prefix[i];
        }
    }
    return out;
}

double canonical_energy_cutoff(const FilamentCurve& curve, double Gamma, double delta) {
    return canonical_energy_profile(curve, Gamma, {delta})[0];
}

} // namespace vring
