#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vring/curve.hpp"
#include "vring/dynamics.hpp"
#include "vring/errors.hpp"
#include "vring/observables.hpp"

using namespace vring;
using cdouble = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Vec3> ring_field(int N) {
    std::vector<Vec3> out(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) out[static_cast<std::size_t>(k)] = ring_tangent(kTwoPi * k / N);
    return out;
}

PerturbationState on_shell(const ModeSpectrum& modes, double lambda, double eps,
                           const PhysicalConstants& c) {
    PerturbationState st;
    st.constants = c;
    st.spectrum = modes;
    st.epsilon = eps;
    st.lambda = lambda;
    st.q0 = {c.R0, 0.0, 0.0};
    const cdouble p = kTwoPi * lambda * c.p0 * modes.coeff(-1);
    st.p = {p.real(), p.imag(), 0.0};
    return st;
}

const PhysicalConstants kUnit = derive_constants(1.0, 1.0, 1.0, 1.0);

} // namespace

TEST_CASE("impulse of the unperturbed ring is pi e_z") {
    const auto imp = impulse_f(ring_field(512));
    CHECK(std::abs(imp.f.x) <= 1e-10);
    CHECK(std::abs(imp.f.y) <= 1e-10);
    CHECK(imp.f.z == doctest::Approx(std::numbers::pi).epsilon(1e-9));
    CHECK(std::abs(imp.f_perp) <= 1e-12);
}

TEST_CASE("impulse of the zero field vanishes") {
    const std::vector<Vec3> zeros(128, Vec3{});
    const auto imp = impulse_f(zeros);
    CHECK(norm(imp.f) == 0.0);
    CHECK(std::abs(imp.f_perp) == 0.0);
}

TEST_CASE("j_z = cos(xi) perturbation: f_perp = (0, pi) and 2 pi j_{-1} = i pi") {
    // amplitude-level field: the single integral sees j_z alone
    const int N = 256;
    std::vector<Vec3> amplitude(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        amplitude[static_cast<std::size_t>(k)] = Vec3{0.0, 0.0, std::cos(kTwoPi * k / N)};
    }
    const auto amp = impulse_f(amplitude);
    CHECK(std::abs(amp.f_perp - cdouble{0.0, std::numbers::pi}) <= 1e-10);

    // folded into the full field at small epsilon the same number comes back
    const double eps = 1e-6;
    auto field = ring_field(N);
    for (int k = 0; k < N; ++k) field[static_cast<std::size_t>(k)].z += eps * std::cos(kTwoPi * k / N);
    const auto full = impulse_f(field);
    CHECK(std::abs(full.f_perp / eps - cdouble{0.0, std::numbers::pi}) <= 1e-8);
    // and the double integral cancels it transversely
    CHECK(std::abs(cdouble{full.f.x, full.f.y} + full.f_perp) <= 1e-10);
}

TEST_CASE("dual-route impulse agreement on perturbed on-shell fields") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        ModeSpectrum raw(6);
        raw.set_coeff(0, {0.02 * uni(rng), 0.0});
        for (int n = 1; n <= 6; ++n) {
            const double scale = 0.1 * std::pow(static_cast<double>(n), -3.0);
            raw.set_coeff(-n, scale * cdouble{uni(rng), uni(rng)});
        }
        const auto st = on_shell(enforce_coupling(raw), kUnit.lambda0, 1e-5, kUnit);
        const auto imp = impulse_f(full_tangent_samples(st, 0.0, 512));
        CHECK(std::abs(cdouble{imp.f.x, imp.f.y} + imp.f_perp) <= 1e-8);
        const cdouble via_mode = st.epsilon * kTwoPi * st.spectrum.coeff(-1);
        CHECK(std::abs(imp.f_perp - via_mode) <= 1e-8);
        CHECK(std::abs(imp.f.z - std::numbers::pi) <= 1e-8);
    }
}

TEST_CASE("momentum of the unperturbed ring is p0 e_z") {
    for (double R0 : {1.0, 2.0}) {
        const auto c = derive_constants(R0, 0.5, 3.0, 1.0);
        const auto st = on_shell(ModeSpectrum(1), c.lambda0, 0.0, c);
        const auto m = momentum(st);
        CHECK(m.p.z == doctest::Approx(c.p0).epsilon(1e-9));
        CHECK(std::abs(m.p.x) <= 1e-10 * c.p0);
        CHECK(std::abs(m.p.y) <= 1e-10 * c.p0);
        CHECK(m.Gamma == doctest::Approx(c.Gamma0).epsilon(1e-15));
    }
}

TEST_CASE("zero circulation gives zero momentum") {
    auto st = on_shell(ModeSpectrum(1), 0.0, 0.0, kUnit);
    const auto m = momentum(st);
    CHECK(norm(m.p) == 0.0);
    CHECK(std::abs(m.p_perp) == 0.0);
}

TEST_CASE("p_perp follows 2 pi m0 Gamma / R0 j_{-1}") {
    ModeSpectrum raw(1);
    raw.set_coeff(-1, {0.0, 0.5});
    const auto st = on_shell(enforce_coupling(raw), kUnit.lambda0, 1e-3, kUnit);
    const auto m = momentum(st);
    CHECK(std::abs(m.p_perp - cdouble{0.0, 1.0}) <= 1e-12); // Gamma0: 2 pi (1/pi) (i/2) = i
}

TEST_CASE("recover_circulation examples") {
    SUBCASE("constructed alignment lambda = 2") {
        const cdouble j{0.3, -0.1};
        const cdouble p = 2.0 * kTwoPi * kUnit.p0 * j; // 2 pi lambda p0 j with lambda = 2
        const auto rec = recover_circulation(p, j, kUnit);
        CHECK(rec.lambda == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(rec.Gamma == doctest::Approx(2.0).epsilon(1e-13));
    }
    SUBCASE("inverse of the momentum example") {
        const auto rec = recover_circulation({0.0, 1.0}, {0.0, 0.5}, kUnit);
        CHECK(rec.lambda == doctest::Approx(kUnit.lambda0).epsilon(1e-14));
        CHECK(rec.Gamma == doctest::Approx(kUnit.Gamma0).epsilon(1e-14));
    }
    SUBCASE("anti-aligned pair gives lambda = -1") {
        const cdouble j{0.3, 0.4};
        const auto rec = recover_circulation(-kTwoPi * kUnit.p0 * j, j, kUnit);
        CHECK(rec.lambda == doctest::Approx(-1.0).epsilon(1e-13));
    }
    SUBCASE("zero inputs are undetermined") {
        CHECK_THROWS_AS(recover_circulation({0.0, 0.0}, {1.0, 0.0}, kUnit), CirculationError);
        CHECK_THROWS_AS(recover_circulation({1.0, 0.0}, {0.0, 0.0}, kUnit), CirculationError);
    }
    SUBCASE("off the constraint surface") {
        CHECK_THROWS_AS(recover_circulation({1.0, 0.0}, {0.0, 1.0}, kUnit), ConstraintError);
    }
}

TEST_CASE("constraint report") {
    SUBCASE("on-shell state reports zeros") {
        ModeSpectrum raw(2);
        raw.set_coeff(-1, {0.2, 0.1});
        raw.set_coeff(-2, {-0.05, 0.02});
        auto st = on_shell(enforce_coupling(raw), 0.8, 1e-3, kUnit);
        st.q0.z = 0.0;
        for (double tau : {0.0, 3.5, 41.0}) {
            const auto rep = constraints(evolve_state(st, tau), tau);
            CHECK(std::abs(rep.phi0) <= 1e-14);
            CHECK(std::abs(rep.phi1) <= 1e-14);
            CHECK(std::abs(rep.phi2) <= 1e-14);
            REQUIRE(rep.lambda_recovered.has_value());
            CHECK(*rep.lambda_recovered == doctest::Approx(0.8).epsilon(1e-12));
        }
    }
    SUBCASE("phi0 arithmetic example") {
        ModeSpectrum raw(1);
        raw.set_coeff(-1, {0.0, 1.0});
        PerturbationState st;
        st.constants = kUnit;
        st.spectrum = enforce_coupling(raw);
        st.p = {1.0, 0.0, 0.0};
        const auto rep = constraints(st, 0.0);
        CHECK(std::abs(rep.phi0_raw - cdouble{0.0, -2.0}) <= 1e-15);
        CHECK(rep.phi0 == doctest::Approx(-2.0).epsilon(1e-15));
    }
    SUBCASE("center offset shows up in phi2") {
        auto st = on_shell(ModeSpectrum(1), kUnit.lambda0, 0.0, kUnit);
        st.q0.z = 0.1;
        const auto rep = constraints(st, 7.3);
        CHECK(rep.phi2 == doctest::Approx(0.1).epsilon(1e-13));
    }
}

TEST_CASE("hamiltonian examples") {
    SUBCASE("single j_{-2} carries 2 sqrt(3)") {
        ModeSpectrum raw(2);
        raw.set_coeff(-2, {1.0, 0.0});
        PerturbationState st;
        st.constants = kUnit;
        st.spectrum = enforce_coupling(raw);
        CHECK(hamiltonian_h0(st) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
        CHECK(hamiltonian(st) == hamiltonian_h0(st));
    }
    SUBCASE("mode -1 carries no internal energy") {
        ModeSpectrum raw(1);
        raw.set_coeff(-1, {0.9, -1.4});
        PerturbationState st;
        st.constants = kUnit;
        st.spectrum = enforce_coupling(raw);
        CHECK(hamiltonian_h0(st) == 0.0);
    }
    SUBCASE("kinetic part |p|^2 / (2 m0)") {
        PerturbationState st;
        st.constants = kUnit;
        st.p = {3.0, 4.0, 0.0};
        CHECK(hamiltonian_h0(st) == doctest::Approx(12.5).epsilon(1e-15));
    }
}

TEST_CASE("poisson bracket canonical pairs") {
    ModeSpectrum raw(3);
    raw.set_coeff(-1, {0.4, -0.2});
    raw.set_coeff(-2, {0.1, 0.3});
    raw.set_coeff(-3, {-0.2, 0.05});
    auto st = on_shell(enforce_coupling(raw), 0.6, 1e-2, kUnit);
    st.q0 = {0.2, -0.7, 0.4};
    const PhasePoint at = phase_point(st);

    CHECK(std::abs(poisson_bracket(observable_p(0), observable_q(0), at, kUnit) -
                   cdouble{1.0, 0.0}) <= 1e-8);
    CHECK(std::abs(poisson_bracket(observable_p(0), observable_q(1), at, kUnit)) <= 1e-9);
    CHECK(std::abs(poisson_bracket(observable_q(0), observable_q(1), at, kUnit)) <= 1e-9);

    // {j_m, conj j_n} = (i / E0 t0) delta_mn with non-unit scales
    const auto c2 = derive_constants(2.0, 0.5, 3.0, 1.0); // E0 t0 = 48 * 0.5 = 24
    const cdouble jj = poisson_bracket(
        [](const PhasePoint& pp) -> cdouble { return pp.j_neg[0]; },
        [](const PhasePoint& pp) -> cdouble { return std::conj(pp.j_neg[0]); }, at, c2);
    CHECK(std::abs(jj - cdouble{0.0, 1.0 / 24.0}) <= 1e-9);
    const cdouble cross_jj = poisson_bracket(
        [](const PhasePoint& pp) -> cdouble { return pp.j_neg[0]; },
        [](const PhasePoint& pp) -> cdouble { return std::conj(pp.j_neg[1]); }, at, c2);
    CHECK(std::abs(cross_jj) <= 1e-9);

    // j_0 annulates every bracket (the degenerate direction)
    const Observable j0_obs = [](const PhasePoint& pp) -> cdouble { return pp.j0; };
    CHECK(std::abs(poisson_bracket(j0_obs, observable_q(0), at, kUnit)) <= 1e-12);
    CHECK(std::abs(poisson_bracket(
              j0_obs,
              [](const PhasePoint& pp) -> cdouble { return std::conj(pp.j_neg[0]); }, at,
              kUnit)) <= 1e-12);
}

TEST_CASE("constraint brackets vanish") {
    ModeSpectrum raw(2);
    raw.set_coeff(-1, {0.5, 0.2});
    raw.set_coeff(-2, {0.1, -0.4});
    auto st = on_shell(enforce_coupling(raw), 0.9, 1e-2, kUnit);
    const PhasePoint at = phase_point(st);

    CHECK(std::abs(poisson_bracket(observable_phi0(), observable_phi2(0.4, kUnit.R0), at,
                                   kUnit)) <= 1e-8);
    CHECK(std::abs(poisson_bracket(observable_h0(kUnit), observable_phi0(), at, kUnit)) <=
          1e-8);
}

TEST_CASE("poisson bracket is antisymmetric on random polynomial observables") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    ModeSpectrum raw(2);
    raw.set_coeff(-1, {uni(rng), uni(rng)});
    raw.set_coeff(-2, {uni(rng), uni(rng)});
    auto st = on_shell(enforce_coupling(raw), 1.1, 1e-2, kUnit);
    st.q0 = {uni(rng), uni(rng), uni(rng)};
    const PhasePoint at = phase_point(st);

    const Observable A = [](const PhasePoint& pp) -> cdouble {
        return pp.q.x * pp.p.y + std::norm(pp.j_neg[1]) + pp.q.z;
    };
    const Observable B = [](const PhasePoint& pp) -> cdouble {
        return pp.p.x * pp.p.x - 2.0 * pp.q.y + (pp.j_neg[0] * std::conj(pp.j_neg[1])).real();
    };
    const cdouble ab = poisson_bracket(A, B, at, kUnit);
    const cdouble ba = poisson_bracket(B, A, at, kUnit);
    CHECK(std::abs(ab + ba) <= 1e-8);
    CHECK(std::abs(ab) > 1e-6); // the pair is not degenerate

    // Leibniz: {A, B C} = {A, B} C + B {A, C}
    const Observable C = [](const PhasePoint& pp) -> cdouble {
        return pp.p.y + pp.j_neg[0].real() * pp.q.x;
    };
    const Observable BC = [&B, &C](const PhasePoint& pp) -> cdouble {
        return B(pp) * C(pp);
    };
    const cdouble lhs = poisson_bracket(A, BC, at, kUnit);
    const cdouble rhs = poisson_bracket(A, B, at, kUnit) * C(at) +
                        B(at) * poisson_bracket(A, C, at, kUnit);
    CHECK(std::abs(lhs - rhs) <= 1e-8);
}

TEST_CASE("hamilton equations hold") {
    SUBCASE("only j_{-1}: the internal series vanishes") {
        ModeSpectrum raw(1);
        raw.set_coeff(-1, {0.4, 0.1});
        const auto st = on_shell(enforce_coupling(raw), 0.7, 1e-2, kUnit);
        const auto rep = verify_hamilton_equations(st, 1.0);
        CHECK(rep.ok);
        CHECK(rep.max_error_series <= 1e-9);
    }
    SUBCASE("j_{-2} excited: bracket, series and finite difference agree") {
        ModeSpectrum raw(2);
        raw.set_coeff(-1, {0.2, -0.3});
        raw.set_coeff(-2, {0.5, 0.25});
        const auto st = on_shell(enforce_coupling(raw), 0.9, 1e-2, kUnit);
        const auto rep = verify_hamilton_equations(st, 2.0);
        CHECK(rep.ok);
    }
    SUBCASE("zero spectrum passes trivially") {
        const auto st = on_shell(ModeSpectrum(1), kUnit.lambda0, 0.0, kUnit);
        CHECK(verify_hamilton_equations(st, 1.0).ok);
    }
}

TEST_CASE("canonical energy diverges logarithmically on the circle") {
    const auto st = on_shell(ModeSpectrum(1), kUnit.lambda0, 0.0, kUnit);
    const auto curve = reconstruct_curve(st, 0.0, 16384);
    const double Gamma = 1.0;

    const auto E = canonical_energy_profile(curve, Gamma, {0.1, 0.05, 0.025});
    CHECK(E[1] > E[0]);
    CHECK(E[2] > E[1]);

    // exact circle value: (Gamma^2 R0 / 2)(-ln tan(delta/4) - 2 cos(delta/2))
    auto exact = [&](double d) {
        return 0.5 * (-std::log(std::tan(d / 4.0)) - 2.0 * std::cos(d / 2.0));
    };
    for (std::size_t i = 0; i < 3; ++i) {
        const double d = std::vector<double>{0.1, 0.05, 0.025}[i];
        CHECK(E[i] == doctest::Approx(exact(d)).epsilon(5e-3));
    }
    const double slope = (E[2] - E[1]) / std::numbers::ln2;
    CHECK(std::abs(slope - 0.5) <= 0.05 * 0.5);

    CHECK(canonical_energy_cutoff(curve, 0.0, 0.1) == 0.0);
    CHECK_THROWS_AS(canonical_energy_cutoff(curve, 1.0, 1e-5), ResolutionError);
}
