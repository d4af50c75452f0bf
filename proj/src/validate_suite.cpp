#include "vring/validate_suite.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "vring/curve.hpp"
#include "vring/dispersion.hpp"
#include "vring/dynamics.hpp"
#include "vring/errors.hpp"
#include "vring/fourier.hpp"
#include "vring/integrators.hpp"
#include "vring/observables.hpp"
#include "vring/quantum.hpp"
#include "vring/spectrum.hpp"

namespace vring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using cdouble = std::complex<double>;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

ModeSpectrum random_coupled_spectrum(int n_max, std::mt19937& rng, double power,
                                     double amplitude = 1.0) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    ModeSpectrum s(n_max);
    s.set_coeff(0, {0.3 * amplitude * uni(rng), 0.0});
    for (int n = 1; n <= n_max; ++n) {
        const double scale = amplitude * std::pow(static_cast<double>(n), -power);
        s.set_coeff(-n, scale * cdouble{uni(rng), uni(rng)});
    }
    return enforce_coupling(s);
}

PerturbationState on_shell_state(const ModeSpectrum& spectrum, double lambda,
                                 double epsilon, const PhysicalConstants& c) {
    PerturbationState st;
    st.constants = c;
    st.spectrum = spectrum;
    st.epsilon = epsilon;
    st.lambda = lambda;
    st.q0 = {c.R0, 0.0, 0.0};
    const cdouble p = 2.0 * std::numbers::pi * lambda * c.p0 * spectrum.coeff(-1);
    st.p = {p.real(), p.imag(), 0.0};
    return st;
}

struct Suite {
    std::vector<CheckResult> results;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }
    template <typename F>
    void guarded(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name + " (exception)", false, e.what());
        }
    }
};

} // namespace

std::vector<CheckResult> run_invariant_suite(unsigned seed) {
    Suite suite;
    std::mt19937 rng(seed);
    const PhysicalConstants unit = derive_constants(1.0, 1.0, 1.0, 1.0);

    suite.guarded("constants-identities", [&] {
        bool ok = true;
        for (const auto& [R0, t0, m0] :
             {std::array{1.0, 1.0, 1.0}, std::array{2.0, 1.0, 1.0}, std::array{1.0, 2.0, 3.0},
              std::array{0.7, 1.9, 4.2}}) {
            const auto c = derive_constants(R0, t0, m0, 1.0);
            ok = ok && c.p0 * c.t0 / (c.m0 * c.R0) == 1.0;
            ok = ok && c.E0 == c.p0 * c.R0 / c.t0;
            ok = ok && c.Gamma0 == c.lambda0 * c.R0 * c.R0 / c.t0;
        }
        const auto c211 = derive_constants(2.0, 1.0, 1.0, 1.0);
        ok = ok && c211.p0 == 2.0 && c211.E0 == 4.0 &&
             std::abs(c211.Gamma0 - 4.0 / std::numbers::pi) < 1e-15;
        suite.add("constants-identities", ok);
    });

    suite.guarded("dispersion-table", [&] {
        bool ok = dispersion(0) == 0.0 && dispersion(1) == 0.0 && dispersion(-1) == 0.0;
        double worst = 0.0;
        for (int n = 2; n <= 64; ++n) {
            const long double nl = n;
            const long double wl = nl * sqrtl(nl * nl - 1.0L);
            const long double cl = 2.0L * (wl - nl * nl + 0.5L);
            worst = std::max(worst, std::abs(static_cast<double>(dispersion(n) - wl)) /
                                        std::max(1.0, std::abs(static_cast<double>(wl))));
            worst = std::max(worst,
                             std::abs(static_cast<double>(coupling_coefficient(n) - cl)) /
                                 std::max(1.0, std::abs(static_cast<double>(cl))));
            ok = ok && dispersion(-n) == -dispersion(n);
        }
        ok = ok && worst < 1e-13;
        ok = ok && coupling_coefficient(0) == 1.0 && coupling_coefficient(1) == -1.0;
        bool threw = false;
        try {
            coupling_coefficient(-1);
        } catch (const DomainError&) {
            threw = true;
        }
        suite.add("dispersion-table", ok && threw, "max rel err " + fmt(worst));
    });

    suite.guarded("coupling-monotone", [&] {
        bool ok = true;
        for (int n = 2; n < 64; ++n) {
            ok = ok && std::abs(coupling_coefficient(n + 1)) < std::abs(coupling_coefficient(n));
        }
        suite.add("coupling-monotone", ok);
    });

    suite.guarded("transform-roundtrip", [&] {
        // decay keeps the derived positive side O(1) on the grid
        const ModeSpectrum s = random_coupled_spectrum(32, rng, 3.0, 0.5);
        const auto samples = samples_from_modes(s, 256);
        const ModeSpectrum back = modes_from_samples(samples, 32);
        double worst = 0.0;
        for (int n = -32; n <= 32; ++n) worst = std::max(worst, std::abs(back.coeff(n) - s.coeff(n)));
        suite.add("transform-roundtrip", worst < 1e-12, "max err " + fmt(worst));
    });

    suite.guarded("coupling-idempotent", [&] {
        const ModeSpectrum s = random_coupled_spectrum(16, rng, 1.0);
        const ModeSpectrum once = enforce_coupling(s);
        const ModeSpectrum twice = enforce_coupling(once);
        double worst = 0.0;
        for (int n = -16; n <= 16; ++n) {
            worst = std::max(worst, std::abs(twice.coeff(n) - once.coeff(n)));
        }
        suite.add("coupling-idempotent", worst == 0.0 && coupling_satisfied(once));
    });

    suite.guarded("closure-checks", [&] {
        const int N = 256;
        std::vector<Vec3> ring(N), bad_z(N), bad_rho(N);
        for (int k = 0; k < N; ++k) {
            const double xi = kTwoPi * k / N;
            ring[k] = ring_tangent(xi);
            bad_z[k] = Vec3{0.0, 0.0, 1.0};
            bad_rho[k] = std::cos(xi) * e_rho(xi);
        }
        const auto r1 = check_closure(ring);
        const auto r2 = check_closure(bad_z);
        const auto r3 = check_closure(bad_rho);
        const bool ok = r1.pass() && !r2.pass() && std::abs(r2.jz - kTwoPi) < 1e-10 &&
                        !r3.pass() && std::abs(r3.jrho_plus - cdouble{std::numbers::pi, 0.0}) < 1e-10;
        suite.add("closure-checks", ok);
    });

    suite.guarded("curve-circle", [&] {
        PerturbationState ring = on_shell_state(ModeSpectrum(1), unit.lambda0, 0.0, unit);
        const auto curve = reconstruct_curve(ring, 0.0, 128);
        double worst = 0.0;
        for (int k = 0; k < 128; ++k) {
            const double xi = curve.xi[k];
            worst = std::max(worst, norm(curve.points[k] -
                                         Vec3{std::cos(xi), std::sin(xi), 0.0}));
        }
        suite.add("curve-circle", worst < 1e-12 && curve.closed, "max err " + fmt(worst));
    });

    suite.guarded("curve-tangent-consistency", [&] {
        std::mt19937 local(seed + 1);
        PerturbationState st =
            on_shell_state(random_coupled_spectrum(8, local, 2.0), unit.lambda0, 1e-3, unit);
        const auto curve = reconstruct_curve(st, 0.4, 256);
        // d r / d xi must equal R0 j on the grid
        std::vector<cdouble> comp(curve.points.size());
        double worst = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const Vec3& v = curve.points[k];
                comp[k] = {axis == 0 ? v.x : (axis == 1 ? v.y : v.z), 0.0};
            }
            const auto d = fourier::derivative(comp);
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const Vec3& j = curve.tangent[k];
                const double expect = axis == 0 ? j.x : (axis == 1 ? j.y : j.z);
                worst = std::max(worst, std::abs(d[k].real() - unit.R0 * expect));
            }
        }
        suite.add("curve-tangent-consistency", worst <= 1e-8 * unit.R0 && curve.closed,
                  "max |dr - R0 j| = " + fmt(worst));
    });

    suite.guarded("evolve-properties", [&] {
        const ModeSpectrum s = random_coupled_spectrum(16, rng, 3.0, 0.5);
        const ModeSpectrum a = evolve_modes(evolve_modes(s, 0.7), 1.9);
        const ModeSpectrum b = evolve_modes(s, 2.6);
        const ModeSpectrum c = evolve_modes_via_independent(s, 2.6);
        double group = 0.0, indep = 0.0, moduli = 0.0;
        for (int n = -16; n <= 16; ++n) {
            group = std::max(group, std::abs(a.coeff(n) - b.coeff(n)));
            indep = std::max(indep, std::abs(c.coeff(n) - b.coeff(n)));
            moduli = std::max(moduli, std::abs(std::abs(b.coeff(n)) - std::abs(s.coeff(n))));
        }
        bool stationary = true;
        for (int n : {-1, 0, 1}) {
            stationary = stationary && std::abs(b.coeff(n) - s.coeff(n)) < 1e-15;
        }
        const ModeSpectrum back = evolve_modes(s, kTwoPi / (2.0 * std::sqrt(3.0)));
        const bool periodic = std::abs(back.coeff(-2) - s.coeff(-2)) < 1e-13;
        suite.add("evolve-properties",
                  group < 1e-13 && indep < 1e-12 && moduli < 1e-14 && stationary && periodic,
                  "group " + fmt(group) + ", indep " + fmt(indep));
    });

    suite.guarded("evolve-stability-bound", [&] {
        const ModeSpectrum s = random_coupled_spectrum(12, rng, 1.0);
        double bound = 0.0;
        for (int n = -12; n <= 12; ++n) bound += std::abs(s.coeff(n));
        bool ok = true;
        for (double tau = 0.0; tau <= 100.0; tau += 5.0) {
            for (const auto& v : complex_tangent_field(s, tau, 128)) {
                ok = ok && std::abs(v) <= bound * (1.0 + 1e-12);
            }
        }
        suite.add("evolve-stability-bound", ok, "sum |j_n| = " + fmt(bound));
    });

    suite.guarded("linear-oracle", [&] {
        std::mt19937 local(seed + 2);
        const ModeSpectrum s = random_coupled_spectrum(8, local, 6.0);
        const auto initial = samples_from_modes(s, 128);
        const auto traj = integrate_linear(initial, 1.0, 1e-3, {.snapshot_stride = 1000});
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const auto closed = complex_tangent_field(s, traj.times[i], 128);
            for (std::size_t k = 0; k < closed.size(); ++k) {
                worst = std::max(worst, std::abs(closed[k] - traj.fields[i][k]));
            }
        }
        suite.add("linear-oracle", worst <= 1e-6, "sup err " + fmt(worst));
    });

    suite.guarded("nonlinear-fixed-point", [&] {
        const int N = 64;
        std::vector<Vec3> j0(N);
        for (int k = 0; k < N; ++k) j0[k] = ring_tangent(kTwoPi * k / N);
        const auto traj = integrate_nonlinear(j0, 1.0, 1e-3, {.snapshot_stride = 250});
        double worst = 0.0;
        for (const auto& field : traj.fields) {
            for (int k = 0; k < N; ++k) {
                worst = std::max(worst, norm(field[k] - j0[k]));
            }
        }
        suite.add("nonlinear-fixed-point", worst <= 1e-10, "sup err " + fmt(worst));
    });

    suite.guarded("linearization-order", [&] {
        const int N = 128;
        const double dtau = 2.5e-4;
        const double tau_end = 1.0;
        ModeSpectrum pair(2);
        pair.set_coeff(-2, {0.00466, 0.00327});
        const ModeSpectrum delta_modes = enforce_coupling(pair); // sup |delta| ~ 0.1

        auto defect = [&](double eps) {
            PerturbationState st = on_shell_state(delta_modes, unit.lambda0, eps, unit);
            const auto init = full_tangent_samples(st, 0.0, N);
            const auto traj = integrate_nonlinear(init, tau_end, dtau,
                                                  {.snapshot_stride = 1 << 30});
            const auto reference = full_tangent_samples(st, tau_end, N);
            double sup = 0.0;
            const auto& last = traj.fields.back();
            for (int k = 0; k < N; ++k) sup = std::max(sup, norm(last[k] - reference[k]));
            return sup;
        };
        const double d1 = defect(1e-2);
        const double d2 = defect(5e-3);
        const double d3 = defect(2.5e-3);
        const double r12 = d1 / d2;
        const double r23 = d2 / d3;
        suite.add("linearization-order",
                  r12 >= 3.0 && r12 <= 5.0 && r23 >= 3.0 && r23 <= 5.0,
                  "ratios " + fmt(r12) + ", " + fmt(r23));
    });

    suite.guarded("jphi-conservation", [&] {
        const int N = 64; // unfiltered linearized stepper: omega(N/2) dtau stays stable
        ModeSpectrum pair(3);
        pair.set_coeff(-2, {0.4, -0.2});
        pair.set_coeff(-3, {0.1, 0.3});
        const ModeSpectrum modes = enforce_coupling(pair);
        const auto jc = complex_tangent_field(modes, 0.0, N);
        std::vector<Vec3> delta(N);
        for (int k = 0; k < N; ++k) {
            const double xi = kTwoPi * k / N;
            delta[k] = jc[k].real() * e_rho(xi) + jc[k].imag() * e_z();
        }
        double drift = 0.0;
        auto measure = [&](const std::vector<Vec3>& d) {
            double acc = 0.0;
            for (int k = 0; k < N; ++k) {
                acc += std::abs(dot(d[k], ring_tangent(kTwoPi * k / N))) * kTwoPi / N;
            }
            return acc;
        };
        const double start = measure(delta);
        auto d = delta;
        for (int s = 0; s < 1000; ++s) d = step_linearized_vector(d, 1e-3);
        drift = std::abs(measure(d) - start);
        suite.add("jphi-conservation", drift <= 1e-8, "drift " + fmt(drift));
    });

    suite.guarded("impulse-identities", [&] {
        const int N = 512;
        std::vector<Vec3> ring(N);
        for (int k = 0; k < N; ++k) ring[k] = ring_tangent(kTwoPi * k / N);
        const auto ring_imp = impulse_f(ring);
        const double ring_err = norm(ring_imp.f - Vec3{0.0, 0.0, std::numbers::pi});

        std::mt19937 local(seed + 3);
        const double eps = 1e-5;
        double dual = 0.0;
        double vs_mode = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            PerturbationState st = on_shell_state(random_coupled_spectrum(6, local, 3.0, 0.1),
                                                  unit.lambda0, eps, unit);
            const auto imp = impulse_f(full_tangent_samples(st, 0.0, N));
            const cdouble transverse{imp.f.x, imp.f.y};
            dual = std::max(dual, std::abs(transverse + imp.f_perp));
            const cdouble expected = eps * 2.0 * std::numbers::pi * st.spectrum.coeff(-1);
            vs_mode = std::max(vs_mode, std::abs(imp.f_perp - expected));
        }
        suite.add("impulse-identities", ring_err <= 1e-8 && dual <= 1e-8 && vs_mode <= 1e-8,
                  "ring " + fmt(ring_err) + ", dual " + fmt(dual) + ", mode " + fmt(vs_mode));
    });

    suite.guarded("momentum-circulation", [&] {
        PerturbationState ring = on_shell_state(ModeSpectrum(1), unit.lambda0, 0.0, unit);
        const auto m = momentum(ring);
        const bool p0_ok = std::abs(m.p.z - unit.p0) <= 1e-8 &&
                           std::abs(m.p.x) <= 1e-12 && std::abs(m.p.y) <= 1e-12;

        const auto rec = recover_circulation(cdouble{0.0, 1.0}, cdouble{0.0, 0.5}, unit);
        const bool rec_ok = std::abs(rec.lambda - unit.lambda0) < 1e-14 &&
                            std::abs(rec.Gamma - unit.Gamma0) < 1e-14;
        const auto anti =
            recover_circulation(-2.0 * std::numbers::pi * unit.p0 * cdouble{0.3, 0.4},
                                cdouble{0.3, 0.4}, unit);
        bool threw = false;
        try {
            recover_circulation({0.0, 0.0}, {1.0, 0.0}, unit);
        } catch (const CirculationError&) {
            threw = true;
        }
        suite.add("momentum-circulation",
                  p0_ok && rec_ok && std::abs(anti.lambda + 1.0) < 1e-12 && threw);
    });

    suite.guarded("conservation-drift", [&] {
        std::mt19937 local(seed + 4);
        PerturbationState st =
            on_shell_state(random_coupled_spectrum(6, local, 1.5), 0.7, 1e-3, unit);
        const double h0 = hamiltonian_h0(st);
        const double pmag = std::abs(transverse_momentum(st));
        std::vector<double> moduli;
        for (int n = 1; n <= 6; ++n) moduli.push_back(std::abs(st.spectrum.coeff(-n)));

        double drift = 0.0;
        for (double tau = 0.0; tau <= 100.0; tau += 5.0) {
            const PerturbationState evolved = evolve_state(st, tau);
            drift = std::max(drift, std::abs(hamiltonian_h0(evolved) - h0));
            drift = std::max(drift, std::abs(std::abs(transverse_momentum(evolved)) - pmag));
            for (int n = 1; n <= 6; ++n) {
                drift = std::max(drift,
                                 std::abs(std::abs(evolved.spectrum.coeff(-n)) - moduli[n - 1]));
            }
            const auto rep = constraints(evolved, tau);
            drift = std::max(drift, std::abs(rep.phi0));
            drift = std::max(drift, std::abs(rep.phi1));
            drift = std::max(drift, std::abs(rep.phi2));
        }
        suite.add("conservation-drift", drift <= 1e-10, "max drift " + fmt(drift));
    });

    suite.guarded("poisson-brackets", [&] {
        std::mt19937 local(seed + 5);
        PerturbationState st =
            on_shell_state(random_coupled_spectrum(4, local, 1.0), 0.9, 1e-2, unit);
        st.q0 = {0.3, -0.2, 0.1};
        const PhasePoint at = phase_point(st);

        const cdouble pq = poisson_bracket(observable_p(0), observable_q(0), at, unit);
        const cdouble px_qy = poisson_bracket(observable_p(0), observable_q(1), at, unit);
        const cdouble jj = poisson_bracket(
            [](const PhasePoint& pp) -> cdouble { return pp.j_neg[0]; },
            [](const PhasePoint& pp) -> cdouble { return std::conj(pp.j_neg[0]); }, at, unit);
        const cdouble expected_jj = cdouble{0.0, 1.0} / (unit.E0 * unit.t0);
        const cdouble phi0_phi2 =
            poisson_bracket(observable_phi0(), observable_phi2(0.3, unit.R0), at, unit);
        const cdouble h0_phi0 =
            poisson_bracket(observable_h0(unit), observable_phi0(), at, unit);

        // antisymmetry on a random polynomial pair
        Observable A = [](const PhasePoint& pp) -> cdouble {
            return pp.q.x * pp.p.y + std::norm(pp.j_neg[1]) + pp.p.z * pp.q.z;
        };
        Observable B = [](const PhasePoint& pp) -> cdouble {
            return pp.p.x * pp.p.x + pp.q.y + (pp.j_neg[0] * std::conj(pp.j_neg[1])).real();
        };
        const cdouble ab = poisson_bracket(A, B, at, unit);
        const cdouble ba = poisson_bracket(B, A, at, unit);

        const bool ok = std::abs(pq - cdouble{1.0, 0.0}) <= 1e-8 && std::abs(px_qy) <= 1e-8 &&
                        std::abs(jj - expected_jj) <= 1e-8 && std::abs(phi0_phi2) <= 1e-8 &&
                        std::abs(h0_phi0) <= 1e-8 && std::abs(ab + ba) <= 1e-8;
        suite.add("poisson-brackets", ok,
                  "pq err " + fmt(std::abs(pq - cdouble{1.0, 0.0})) + ", {H0,Phi0} " +
                      fmt(std::abs(h0_phi0)));
    });

    suite.guarded("hamilton-equations", [&] {
        std::mt19937 local(seed + 6);
        PerturbationState st =
            on_shell_state(random_coupled_spectrum(5, local, 1.5), 0.8, 1e-2, unit);
        const auto rep = verify_hamilton_equations(st, 2.0, 10, seed);
        suite.add("hamilton-equations", rep.ok,
                  "series " + fmt(rep.max_error_series) + ", fd " + fmt(rep.max_error_fd));
    });

    suite.guarded("energy-divergence", [&] {
        PerturbationState ring = on_shell_state(ModeSpectrum(1), unit.lambda0, 0.0, unit);
        const auto curve = reconstruct_curve(ring, 0.0, 16384);
        const double Gamma = 1.0;
        const auto E = canonical_energy_profile(curve, Gamma, {0.1, 0.05, 0.025});
        const double target = Gamma * Gamma * unit.R0 / 2.0;
        const double slope1 = (E[1] - E[0]) / std::numbers::ln2;
        const double slope2 = (E[2] - E[1]) / std::numbers::ln2;
        const bool ok = E[2] > E[1] && E[1] > E[0] &&
                        std::abs(slope2 - target) <= 0.05 * target;
        suite.add("energy-divergence", ok,
                  "slopes " + fmt(slope1) + ", " + fmt(slope2) + " vs " + fmt(target));
    });

    suite.guarded("quantum-coherent", [&] {
        const FockVector vac = coherent_state({0.0, 0.0}, 64);
        bool ok = std::abs(vac.amp[0] - cdouble{1.0, 0.0}) < 1e-15;
        const FockVector one = coherent_state({1.0, 0.0}, 64);
        ok = ok && std::abs(one.amp[0] - std::exp(-0.5)) < 1e-10;

        std::uniform_real_distribution<double> uni(-1.2, 1.2);
        for (int trial = 0; trial < 5; ++trial) {
            const cdouble a{uni(rng), uni(rng)};
            const cdouble b{uni(rng), uni(rng)};
            const cdouble overlap = fock_overlap(coherent_state(a, 128), coherent_state(b, 128));
            const cdouble expected =
                std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
            ok = ok && std::abs(overlap - expected) < 1e-10;
        }

        double worst = 0.0;
        for (double mag : {0.5, 1.5, 3.0}) {
            const cdouble p = std::polar(mag, 0.9);
            QuantumState qs = make_physical_state(p, unit.lambda0, {}, 128, unit);
            // alpha = p/(2 pi lambda0 s) = p/2 in unit scales; |alpha| <= 1.5 here
            worst = std::max(worst, annihilation_residual(qs));
        }
        ok = ok && worst <= 1e-8;

        QuantumState number_state = make_physical_state({1.0, 0.0}, unit.lambda0, {}, 64, unit);
        number_state.mode1.amp.assign(64, cdouble{0.0, 0.0});
        number_state.mode1.amp[1] = 1.0;
        ok = ok && annihilation_residual(number_state) > 0.1;

        QuantumState zero = make_physical_state({0.0, 0.0}, unit.lambda0, {}, 64, unit);
        ok = ok && annihilation_residual(zero) == 0.0;
        suite.add("quantum-coherent", ok, "max residual " + fmt(worst));
    });

    suite.guarded("quantum-amplitude", [&] {
        bool ok = std::abs(physical_amplitude({0.7, -0.3}, unit.lambda0, {2}, {0.8, 0.1}, unit) -
                           cdouble{0.8, 0.1}) < 1e-15;
        ok = ok && std::abs(physical_amplitude({0.0, 0.0}, 3.7, {}, {1.0, 0.0}, unit) -
                            cdouble{1.0, 0.0}) < 1e-15;
        ok = ok && std::abs(physical_amplitude({1.0, 0.0}, 1e9, {}, {1.0, 0.0}, unit).real() -
                            std::exp(-0.125)) < 1e-6;

        double worst = 0.0;
        for (double lambda : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            for (double mag : {0.5, 1.0, 2.0}) {
                const cdouble p = std::polar(mag, 0.3);
                const cdouble closed = physical_amplitude(p, lambda, {}, {1.0, 0.0}, unit);
                const cdouble overlap = fock_overlap(
                    coherent_state(annihilation_eigenvalue(p, lambda, unit), 128),
                    coherent_state(annihilation_eigenvalue(p, unit.lambda0, unit), 128));
                worst = std::max(worst, std::abs(std::abs(closed) - std::abs(overlap)));
            }
        }
        suite.add("quantum-amplitude", ok && worst <= 1e-6, "|closed - overlap| " + fmt(worst));
    });

    suite.guarded("quantum-spectrum", [&] {
        bool ok = energy_eigenvalue({0.0, 0.0}, {}, unit) == 0.0;
        ok = ok && std::abs(energy_eigenvalue({0.0, 0.0}, {2}, unit) - 2.0 * std::sqrt(3.0)) < 1e-14;
        ok = ok && std::abs(energy_eigenvalue({1.0, 0.0}, {2, 3}, unit) -
                            (0.5 + 2.0 * std::sqrt(3.0) + 6.0 * std::sqrt(2.0))) < 1e-13;
        // additivity over disjoint multisets
        ok = ok && std::abs(energy_eigenvalue({1.0, 0.0}, {2, 2, 4}, unit) -
                            (energy_eigenvalue({1.0, 0.0}, {2}, unit) +
                             energy_eigenvalue({0.0, 0.0}, {2, 4}, unit))) < 1e-13;

        double worst = 0.0;
        for (const auto& ns :
             {std::vector<int>{}, std::vector<int>{2}, std::vector<int>{2, 2},
              std::vector<int>{2, 3}, std::vector<int>{4, 5, 6}}) {
            const auto chk = matrix_hamiltonian_check({0.6, -1.1}, ns, 64, unit);
            worst = std::max(worst, chk.residual);
            ok = ok && chk.ok;
        }
        suite.add("quantum-spectrum", ok, "max residual " + fmt(worst));
    });

    suite.guarded("quantum-phi0", [&] {
        double worst = 0.0;
        for (double mag : {0.5, 1.0, 2.0}) {
            const cdouble p = std::polar(mag, -0.7);
            worst = std::max(worst, std::abs(phi0_expectation(p, unit.lambda0, 128, unit)));
        }
        bool ok = worst <= 1e-10;
        const cdouble p{1.0, 0.0};
        const cdouble mismatched = phi0_expectation_displaced(
            p, cdouble{0.0, 1.0} * annihilation_eigenvalue(p, unit.lambda0, unit), 128, unit);
        ok = ok && std::abs(mismatched) > 0.1;
        ok = ok && std::abs(phi0_expectation({0.0, 0.0}, unit.lambda0, 64, unit)) == 0.0;
        suite.add("quantum-phi0", ok, "max aligned " + fmt(worst));
    });

    suite.guarded("quantum-density", [&] {
        std::vector<double> grid;
        for (int i = 1; i <= 200; ++i) grid.push_back(0.02 * i);
        grid.push_back(unit.lambda0);
        const auto dens = circulation_density({1.3, 0.4}, {}, grid, unit);
        double best = -1.0;
        double best_lambda = 0.0;
        for (const auto& [lambda, d] : dens) {
            if (d > best) {
                best = d;
                best_lambda = lambda;
            }
        }
        bool ok = best_lambda == unit.lambda0 && std::abs(best - 1.0) < 1e-15;

        const auto flat = circulation_density({0.0, 0.0}, {}, {0.3, 0.9, 2.7}, unit);
        for (const auto& [lambda, d] : flat) ok = ok && d == 1.0;

        // symmetric under lambda0/lambda - 1 -> -(lambda0/lambda - 1)
        const double s = 0.4;
        const auto pair = circulation_density(
            {1.0, 0.0}, {}, {unit.lambda0 / (1.0 + s), unit.lambda0 / (1.0 - s)}, unit);
        ok = ok && std::abs(pair[0].second - pair[1].second) < 1e-14;

        // ladder identity on the truncation
        const int D = 32;
        FockVector test;
        test.amp.assign(D, cdouble{0.0, 0.0});
        for (int m = 0; m < D - 2; ++m) test.amp[m] = 1.0 / std::sqrt(static_cast<double>(D));
        const FockVector lhs = apply_annihilation(apply_creation(test));
        const FockVector rhs = apply_creation(apply_annihilation(test));
        double comm = 0.0;
        for (int m = 0; m < D - 2; ++m) {
            comm = std::max(comm, std::abs(lhs.amp[m] - rhs.amp[m] - test.amp[m]));
        }
        ok = ok && comm <= 1e-14;
        suite.add("quantum-density", ok);
    });

    return suite.results;
}

std::vector<CheckResult> validate_state_checks(const PerturbationState& state) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };

    try {
        validate_state(state);
        add("state-structure", true);
    } catch (const std::exception& e) {
        add("state-structure", false, e.what());
        return out;
    }

    const int N = std::max(256, 4 * state.spectrum.n_max());
    const auto field = full_tangent_samples(state, 0.0, N);
    const auto closure = check_closure(field);
    add("closure-constraints", closure.pass());

    const auto curve = reconstruct_curve(state, 0.0, N);
    add("curve-closure", curve.closed,
        "violation " + fmt(curve.closure_violation / state.constants.R0) + " R0");

    const auto rep = constraints(state, 0.0);
    const double pscale =
        std::max(1.0, std::abs(transverse_momentum(state)) *
                          std::max(1.0, std::abs(state.spectrum.coeff(-1))));
    add("phi0", std::abs(rep.phi0) <= 1e-10 * pscale, fmt(rep.phi0));
    add("phi1", std::abs(rep.phi1) <= 1e-10 * std::max(1.0, state.constants.p0), fmt(rep.phi1));
    add("phi2", std::abs(rep.phi2) <= 1e-10 * std::max(1.0, state.constants.R0), fmt(rep.phi2));

    if (rep.lambda_recovered) {
        add("circulation-consistency",
            std::abs(*rep.lambda_recovered - state.lambda) <=
                1e-10 * std::max(1.0, std::abs(state.lambda)),
            "stored " + fmt(state.lambda) + ", recovered " + fmt(*rep.lambda_recovered));
    }
    return out;
}

} // namespace vring
