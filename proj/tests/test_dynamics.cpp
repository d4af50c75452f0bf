#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vring/dynamics.hpp"
#include "vring/errors.hpp"

using namespace vring;
using cdouble = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// decay keeps the derived positive side O(1), so absolute tolerances bite
ModeSpectrum random_spectrum(int n_max, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    ModeSpectrum s(n_max);
    s.set_coeff(0, {uni(rng), 0.0});
    for (int n = 1; n <= n_max; ++n) {
        const double scale = 0.5 * std::pow(static_cast<double>(n), -3.0);
        s.set_coeff(-n, scale * cdouble{uni(rng), uni(rng)});
    }
    return enforce_coupling(s);
}

} // namespace

TEST_CASE("evolve_modes at tau = 0 is the identity") {
    const ModeSpectrum s = random_spectrum(8, 11);
    const ModeSpectrum out = evolve_modes(s, 0.0);
    for (int n = -8; n <= 8; ++n) CHECK(out.coeff(n) == s.coeff(n));
}

TEST_CASE("mode -2 returns to itself after a full phase rotation") {
    ModeSpectrum s(2);
    s.set_coeff(-2, {0.3, -0.8});
    const double period = kTwoPi / (2.0 * std::sqrt(3.0));
    const ModeSpectrum out = evolve_modes(enforce_coupling(s), period);
    CHECK(std::abs(out.coeff(-2) - cdouble{0.3, -0.8}) < 1e-13);
    CHECK(std::abs(out.coeff(2) - enforce_coupling(s).coeff(2)) < 1e-12);
}

TEST_CASE("moduli are invariant under evolution") {
    const ModeSpectrum s = random_spectrum(16, 5);
    for (double tau : {0.37, 12.9, 104.2}) {
        const ModeSpectrum out = evolve_modes(s, tau);
        for (int n = -16; n <= 16; ++n) {
            CHECK(std::abs(std::abs(out.coeff(n)) - std::abs(s.coeff(n))) < 1e-14);
        }
    }
}

TEST_CASE("evolution composes as a group to 1e-13") {
    const ModeSpectrum s = random_spectrum(12, 7);
    const ModeSpectrum split = evolve_modes(evolve_modes(s, 1.7), 2.6);
    const ModeSpectrum direct = evolve_modes(s, 4.3);
    for (int n = -12; n <= 12; ++n) {
        CHECK(std::abs(split.coeff(n) - direct.coeff(n)) < 1e-13);
    }
}

TEST_CASE("zero modes are stationary, coupling preserved") {
    const ModeSpectrum s = random_spectrum(6, 3);
    const ModeSpectrum out = evolve_modes(s, 9.4);
    for (int n : {-1, 0, 1}) CHECK(out.coeff(n) == s.coeff(n));
    CHECK(coupling_satisfied(out));
}

TEST_CASE("independent-set evolution equals full evolution") {
    const ModeSpectrum s = random_spectrum(10, 17);
    for (double tau : {0.0, 0.9, 33.3}) {
        const ModeSpectrum a = evolve_modes(s, tau);
        const ModeSpectrum b = evolve_modes_via_independent(s, tau);
        for (int n = -10; n <= 10; ++n) CHECK(std::abs(a.coeff(n) - b.coeff(n)) < 1e-12);
    }
}

TEST_CASE("only j_{-1}: the field is stationary in tau") {
    ModeSpectrum s(1);
    s.set_coeff(-1, {0.4, 0.7});
    const ModeSpectrum coupled = enforce_coupling(s);
    const auto at0 = complex_tangent_field(coupled, 0.0, 32);
    const auto at5 = complex_tangent_field(coupled, 5.0, 32);
    for (int k = 0; k < 32; ++k) {
        CHECK(std::abs(at0[static_cast<std::size_t>(k)] - at5[static_cast<std::size_t>(k)]) <
              1e-14);
        // j_{-1} e^{-i xi} - conj(j_{-1}) e^{+i xi}
        const double xi = kTwoPi * k / 32;
        const cdouble expect = cdouble{0.4, 0.7} * std::polar(1.0, -xi) -
                               cdouble{0.4, -0.7} * std::polar(1.0, xi);
        CHECK(std::abs(at0[static_cast<std::size_t>(k)] - expect) < 1e-14);
    }
}

TEST_CASE("zero spectrum gives the zero field") {
    const auto field = complex_tangent_field(ModeSpectrum(4), 3.3, 64);
    for (const auto& v : field) CHECK(v == cdouble{0.0, 0.0});
}

TEST_CASE("mode pair (-2, 2) matches the direct summation oracle") {
    ModeSpectrum s(2);
    s.set_coeff(-2, {0.6, 0.15});
    const ModeSpectrum coupled = enforce_coupling(s);

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> tau_dist(0.0, 20.0);
    std::uniform_int_distribution<int> idx_dist(0, 127);
    for (int trial = 0; trial < 10; ++trial) {
        const double tau = tau_dist(rng);
        const int k = idx_dist(rng);
        const double xi = kTwoPi * k / 128;
        const auto field = complex_tangent_field(coupled, tau, 128);

        cdouble direct{0.0, 0.0};
        for (int n : {-2, 2}) {
            direct += coupled.coeff(n) *
                      std::polar(1.0, n * xi + dispersion(n) * tau);
        }
        CHECK(std::abs(field[static_cast<std::size_t>(k)] - direct) < 1e-13);
    }
}

TEST_CASE("stability: sup |j| stays under sum |j_n| out to tau = 100") {
    const ModeSpectrum s = random_spectrum(12, 21);
    double bound = 0.0;
    for (int n = -12; n <= 12; ++n) bound += std::abs(s.coeff(n));
    for (double tau = 0.0; tau <= 100.0; tau += 2.5) {
        for (const auto& v : complex_tangent_field(s, tau, 64)) {
            CHECK(std::abs(v) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("cylindrical components are (Re j, 0, Im j)") {
    const ModeSpectrum s = random_spectrum(4, 77);
    PerturbationState st;
    st.spectrum = s;
    st.epsilon = 1e-2;
    const auto cyl = cylindrical_tangent_field(st, 1.3, 64);
    const auto jc = complex_tangent_field(s, 1.3, 64);
    CHECK(cyl.phi0 == 0.0);
    for (int k = 0; k < 64; ++k) {
        CHECK(cyl.rho[static_cast<std::size_t>(k)] == jc[static_cast<std::size_t>(k)].real());
        CHECK(cyl.z[static_cast<std::size_t>(k)] == jc[static_cast<std::size_t>(k)].imag());
    }
}

TEST_CASE("perturbation stays orthogonal to the ring tangent (j . j0 = j_phi0)") {
    const ModeSpectrum s = random_spectrum(5, 31);
    PerturbationState st;
    st.spectrum = s;
    st.epsilon = 0.3;
    const auto full = full_tangent_samples(st, 2.2, 128);
    for (int k = 0; k < 128; ++k) {
        const double xi = kTwoPi * k / 128;
        const Vec3 delta = full[static_cast<std::size_t>(k)] - ring_tangent(xi);
        CHECK(std::abs(dot(delta, ring_tangent(xi))) < 1e-14);
    }
}
