#include "vring/curve.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vring/dynamics.hpp"
#include "vring/errors.hpp"
#include "vring/fourier.hpp"

namespace vring {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using cdouble = std::complex<double>;

std::vector<cdouble> component(const std::vector<Vec3>& field, int axis) {
    std::vector<cdouble> out(field.size());
    for (std::size_t k = 0; k < field.size(); ++k) {
        const Vec3& v = field[k];
        out[k] = {axis == 0 ? v.x : (axis == 1 ? v.y : v.z), 0.0};
    }
    return out;
}

} // namespace

ClosureReport check_closure(const std::vector<Vec3>& field) {
    if (field.size() < 2) throw DomainError("check_closure: need at least 2 samples");
    const int N = static_cast<int>(field.size());
    const double h = kTwoPi / static_cast<double>(N);

    double sup = 0.0;
    Vec3 cart;
    cdouble plus{0.0, 0.0};
    cdouble minus{0.0, 0.0};
    double jz = 0.0;
    for (int k = 0; k < N; ++k) {
        const double xi = h * static_cast<double>(k);
        const Vec3& j = field[static_cast<std::size_t>(k)];
        sup = std::max(sup, norm(j));
        cart += h * j;
        const double jrho = dot(j, e_rho(xi));
        plus += h * jrho * std::polar(1.0, xi);
        minus += h * jrho * std::polar(1.0, -xi);
        jz += h * j.z;
    }

    ClosureReport r;
    r.cartesian = cart;
    r.jrho_plus = plus;
    r.jrho_minus = minus;
    r.jz = jz;
    r.tolerance = 1e-10 * kTwoPi * std::max(1.0, sup);
    r.cartesian_ok = {std::abs(cart.x) <= r.tolerance, std::abs(cart.y) <= r.tolerance,
                      std::abs(cart.z) <= r.tolerance};
    r.jrho_plus_ok = std::abs(plus) <= r.tolerance;
    r.jrho_minus_ok = std::abs(minus) <= r.tolerance;
    r.jz_ok = std::abs(jz) <= r.tolerance;
    return r;
}

FilamentCurve reconstruct_curve(const PerturbationState& state, double tau, int N) {
    if (N < 2 * state.spectrum.n_max() + 2) {
        throw ResolutionError("reconstruct_curve: need N >= 2 n_max + 2, got N = " +
                              std::to_string(N));
    }
    const Vec3 center = state.q0 + tau * (state.constants.t0 / state.constants.m0) * state.p;
    return reconstruct_from_field(full_tangent_samples(state, tau, N), center,
                                  state.constants.R0);
}

FilamentCurve reconstruct_from_field(const std::vector<Vec3>& field, const Vec3& center,
                                     double R0) {
    const int N = static_cast<int>(field.size());
    if (N < 4) throw DomainError("reconstruct_from_field: need at least 4 samples");

    FilamentCurve curve;
    curve.R0 = R0;
    curve.tangent = field;
    curve.xi.resize(static_cast<std::size_t>(N));
    curve.points.assign(static_cast<std::size_t>(N), Vec3{});
    for (int k = 0; k < N; ++k) {
        curve.xi[static_cast<std::size_t>(k)] =
            kTwoPi * static_cast<double>(k) / static_cast<double>(N);
        curve.points[static_cast<std::size_t>(k)] = center;
    }

    Vec3 mean_j;
    for (int axis = 0; axis < 3; ++axis) {
        const auto samples = component(curve.tangent, axis);
        const auto integral = fourier::kernel_integral(samples);
        const cdouble m = fourier::mean(samples);
        if (axis == 0) mean_j.x = m.real();
        if (axis == 1) mean_j.y = m.real();
        if (axis == 2) mean_j.z = m.real();
        for (int k = 0; k < N; ++k) {
            const double value = R0 * integral[static_cast<std::size_t>(k)].real();
            auto& pt = curve.points[static_cast<std::size_t>(k)];
            if (axis == 0) pt.x += value;
            if (axis == 1) pt.y += value;
            if (axis == 2) pt.z += value;
        }
    }

    // r(2pi-) - r(0) = R0 * closed integral of j
    curve.closure_violation = R0 * kTwoPi * norm(mean_j);
    curve.closed = curve.closure_violation <= 1e-8 * R0;
    return curve;
}

} // namespace vring
