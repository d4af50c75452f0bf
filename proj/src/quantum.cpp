#include "vring/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "vring/dispersion.hpp"
#include "vring/errors.hpp"

namespace vring {

namespace {

using cdouble = std::complex<double>;

void require_excitations(const std::vector<int>& ns, const char* who) {
    for (int n : ns) {
        if (n < 2) {
            throw DomainError(std::string(who) + ": excitation indices must be >= 2, got " +
                              std::to_string(n));
        }
    }
}

// sqrt(hbar / (t0 E0)), the scale of the quantized mode operators.
double mode_scale(const PhysicalConstants& c) { return std::sqrt(c.hbar / (c.t0 * c.E0)); }

// Dense vector on a small tensor product of truncated oscillator factors.
struct ProductSpace {
    std::vector<int> dims;
    std::vector<long> strides;
    long total = 1;

    explicit ProductSpace(const std::vector<int>& d) : dims(d) {
        strides.resize(d.size());
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
            strides[static_cast<std::size_t>(i)] = total;
            total *= d[static_cast<std::size_t>(i)];
        }
    }
};

// Applies a single-factor operator given by its action |m> -> w_up(m)|m+1>
// + w_diag(m)|m> + w_down(m)|m-1>; anything pushed past the truncation is
// dropped.
template <typename Up, typename Diag, typename Down>
std::vector<cdouble> apply_tridiagonal(const ProductSpace& space, int factor,
                                       const std::vector<cdouble>& v, Up w_up,
                                       Diag w_diag, Down w_down) {
    std::vector<cdouble> out(v.size(), cdouble{0.0, 0.0});
    const long stride = space.strides[static_cast<std::size_t>(factor)];
    const int dim = space.dims[static_cast<std::size_t>(factor)];
    for (long idx = 0; idx < space.total; ++idx) {
        const int m = static_cast<int>(idx / stride % dim);
        const cdouble a = v[static_cast<std::size_t>(idx)];
        if (a == cdouble{0.0, 0.0}) continue;
        if (m + 1 < dim) out[static_cast<std::size_t>(idx + stride)] += w_up(m) * a;
        out[static_cast<std::size_t>(idx)] += w_diag(m) * a;
        if (m > 0) out[static_cast<std::size_t>(idx - stride)] += w_down(m) * a;
    }
    return out;
}

std::vector<cdouble> apply_number(const ProductSpace& space, int factor,
                                  const std::vector<cdouble>& v) {
    return apply_tridiagonal(
        space, factor, v, [](int) { return 0.0; },
        [](int m) { return static_cast<double>(m); }, [](int) { return 0.0; });
}

std::vector<cdouble> apply_raise(const ProductSpace& space, int factor,
                                 const std::vector<cdouble>& v) {
    return apply_tridiagonal(
        space, factor, v, [](int m) { return std::sqrt(static_cast<double>(m + 1)); },
        [](int) { return 0.0; }, [](int) { return 0.0; });
}

} // namespace

double FockVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amp) acc += std::norm(a);
    return std::sqrt(acc);
}

cdouble fock_overlap(const FockVector& a, const FockVector& b) {
    const std::size_t n = std::min(a.amp.size(), b.amp.size());
    cdouble acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) acc += std::conj(a.amp[m]) * b.amp[m];
    return acc;
}

FockVector apply_annihilation(const FockVector& v) {
    FockVector out;
    out.amp.assign(v.amp.size(), cdouble{0.0, 0.0});
    for (std::size_t m = 1; m < v.amp.size(); ++m) {
        out.amp[m - 1] = std::sqrt(static_cast<double>(m)) * v.amp[m];
    }
    return out;
}

FockVector apply_creation(const FockVector& v) {
    FockVector out;
    out.amp.assign(v.amp.size(), cdouble{0.0, 0.0});
    for (std::size_t m = 0; m + 1 < v.amp.size(); ++m) {
        out.amp[m + 1] = std::sqrt(static_cast<double>(m + 1)) * v.amp[m];
    }
    return out;
}

FockVector coherent_state(cdouble alpha, int dim) {
    if (dim < 16) throw TruncationError("coherent_state: need dim >= 16");
    const double a2 = std::norm(alpha);
    if (a2 > static_cast<double>(dim) / 4.0) {
        throw TruncationError("coherent_state: |alpha|^2 = " + std::to_string(a2) +
                              " too large for dim = " + std::to_string(dim));
    }
    FockVector v;
    v.amp.resize(static_cast<std::size_t>(dim));
    v.amp[0] = std::exp(-0.5 * a2);
    for (int m = 1; m < dim; ++m) {
        v.amp[static_cast<std::size_t>(m)] =
            v.amp[static_cast<std::size_t>(m - 1)] * alpha /
            std::sqrt(static_cast<double>(m));
    }
    const double deficit = std::abs(1.0 - v.norm());
    if (deficit > 1e-8) {
        throw TruncationError("coherent_state: norm deficit " + std::to_string(deficit));
    }
    return v;
}

cdouble annihilation_eigenvalue(cdouble p, double lambda,
                                const PhysicalConstants& constants) {
    if (lambda == 0.0) throw DomainError("annihilation_eigenvalue: lambda = 0");
    const double s = std::sqrt(constants.hbar * constants.p0 / constants.R0);
    return p / (2.0 * std::numbers::pi * lambda * s);
}

QuantumState make_physical_state(cdouble p, double lambda, std::vector<int> excitations,
                                 int dim, const PhysicalConstants& constants) {
    require_excitations(excitations, "make_physical_state");
    QuantumState st;
    st.p = p;
    st.lambda = lambda;
    st.excitations = std::move(excitations);
    st.constants = constants;
    st.mode1 = coherent_state(annihilation_eigenvalue(p, lambda, constants), dim);
    return st;
}

double annihilation_residual(const QuantumState& state) {
    const PhysicalConstants& c = state.constants;
    const double kappa = 2.0 * std::numbers::pi * state.lambda * c.p0 * mode_scale(c);
    const FockVector lowered = apply_annihilation(state.mode1);
    double num = 0.0;
    for (std::size_t m = 0; m < state.mode1.amp.size(); ++m) {
        num += std::norm(state.p * state.mode1.amp[m] - kappa * lowered.amp[m]);
    }
    const double den = std::abs(state.p) * state.mode1.norm();
    if (num == 0.0) return 0.0;
    return std::sqrt(num) / den;
}

cdouble physical_amplitude(cdouble p, double lambda, const std::vector<int>& excitations,
                           cdouble phi, const PhysicalConstants& constants) {
    if (lambda == 0.0) throw DomainError("physical_amplitude: lambda = 0 is singular");
    require_excitations(excitations, "physical_amplitude");
    const double ratio = constants.lambda0 / lambda - 1.0;
    const double exponent =
        -std::norm(p) * constants.R0 / (8.0 * constants.hbar * constants.p0) * ratio * ratio;
    return phi * std::exp(exponent);
}

double energy_eigenvalue(cdouble p, const std::vector<int>& excitations,
                         const PhysicalConstants& constants) {
    require_excitations(excitations, "energy_eigenvalue");
    double internal = 0.0;
    for (int n : excitations) internal += dispersion(n);
    return std::norm(p) / (2.0 * constants.m0) + constants.hbar / constants.t0 * internal;
}

HamiltonianCheck matrix_hamiltonian_check(cdouble p, const std::vector<int>& excitations,
                                          int dim, const PhysicalConstants& constants) {
    require_excitations(excitations, "matrix_hamiltonian_check");
    if (excitations.size() > 3) {
        throw DomainError("matrix_hamiltonian_check: at most 3 excitations");
    }
    for (int n : excitations) {
        if (n > 6) throw DomainError("matrix_hamiltonian_check: excitations must be <= 6");
    }
    if (dim < 32) throw DomainError("matrix_hamiltonian_check: need dim >= 32");

    // factor 0: displaced mode 1; one small factor per distinct excited mode
    std::map<int, int> multiplicity;
    for (int n : excitations) ++multiplicity[n];
    std::vector<int> dims{dim};
    std::vector<int> mode_of_factor{1};
    for (const auto& [n, mult] : multiplicity) {
        dims.push_back(std::min(8, mult + 3));
        mode_of_factor.push_back(n);
    }
    const ProductSpace space(dims);

    // v = a+_{n_1} ... a+_{n_k} (|coherent> (x) |0...>)
    const FockVector mode1 =
        coherent_state(annihilation_eigenvalue(p, constants.lambda0, constants), dim);
    std::vector<cdouble> v(static_cast<std::size_t>(space.total), cdouble{0.0, 0.0});
    for (int m = 0; m < dim; ++m) {
        v[static_cast<std::size_t>(m) * static_cast<std::size_t>(space.strides[0])] =
            mode1.amp[static_cast<std::size_t>(m)];
    }
    for (int n : excitations) {
        int factor = 0;
        for (std::size_t f = 1; f < mode_of_factor.size(); ++f) {
            if (mode_of_factor[f] == n) factor = static_cast<int>(f);
        }
        v = apply_raise(space, factor, v);
    }

    // H v = |p|^2/(2 m0) v + (hbar/t0) sum over excited modes omega(n) N_n v;
    // mode 1 carries no internal term.
    std::vector<cdouble> hv(v.size(), cdouble{0.0, 0.0});
    const double kinetic = std::norm(p) / (2.0 * constants.m0);
    for (std::size_t i = 0; i < v.size(); ++i) hv[i] = kinetic * v[i];
    for (std::size_t f = 1; f < mode_of_factor.size(); ++f) {
        const auto nv = apply_number(space, static_cast<int>(f), v);
        const double w = constants.hbar / constants.t0 * dispersion(mode_of_factor[f]);
        for (std::size_t i = 0; i < v.size(); ++i) hv[i] += w * nv[i];
    }

    HamiltonianCheck out;
    out.eigenvalue = energy_eigenvalue(p, excitations, constants);
    double num = 0.0;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        num += std::norm(hv[i] - out.eigenvalue * v[i]);
        vnorm += std::norm(v[i]);
    }
    const double scale = std::max(std::abs(out.eigenvalue) * std::sqrt(vnorm), 1e-300);
    out.residual = num == 0.0 ? 0.0 : std::sqrt(num) / scale;
    out.ok = out.residual <= 1e-8;
    return out;
}

cdouble phi0_expectation_displaced(cdouble p, cdouble alpha, int dim,
                                   const PhysicalConstants& constants) {
    const FockVector v = coherent_state(alpha, dim);
    const FockVector lowered = apply_annihilation(v);
    const cdouble a_expect = fock_overlap(v, lowered);      // <v| a |v>
    const cdouble adag_expect = std::conj(a_expect);        // <v| a+ |v>
    const double s = mode_scale(constants);
    return p * s * adag_expect - std::conj(p) * s * a_expect;
}

cdouble phi0_expectation(cdouble p, double lambda, int dim,
                         const PhysicalConstants& constants) {
    return phi0_expectation_displaced(p, annihilation_eigenvalue(p, lambda, constants),
                                      dim, constants);
}

std::vector<std::pair<double, double>> circulation_density(
    cdouble p, const std::vector<int>& excitations, const std::vector<double>& lambda_grid,
    const PhysicalConstants& constants) {
    require_excitations(excitations, "circulation_density");
    std::vector<std::pair<double, double>> out;
    out.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        if (lambda == 0.0) {
            throw DomainError("circulation_density: lambda grid must exclude 0");
        }
        const cdouble amp = physical_amplitude(p, lambda, excitations, {1.0, 0.0}, constants);
        out.emplace_back(lambda, std::norm(amp));
    }
    return out;
}

} // namespace vring
