// Python bindings for the vortex-ring oscillation laboratory.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "vring/curve.hpp"
#include "vring/errors.hpp"
#include "vring/dispersion.hpp"
#include "vring/dynamics.hpp"
#include "vring/integrators.hpp"
#include "vring/observables.hpp"
#include "vring/quantum.hpp"
#include "vring/state_io.hpp"
#include "vring/validate_suite.hpp"

namespace py = pybind11;
using namespace vring;
using cdouble = std::complex<double>;

namespace {

std::vector<std::array<double, 3>> to_arrays(const std::vector<Vec3>& v) {
    std::vector<std::array<double, 3>> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back({x.x, x.y, x.z});
    return out;
}

std::vector<Vec3> from_arrays(const std::vector<std::array<double, 3>>& v) {
    std::vector<Vec3> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back({x[0], x[1], x[2]});
    return out;
}

ModeSpectrum spectrum_from_pairs(int n_max,
                                 const std::vector<std::pair<int, cdouble>>& entries) {
    ModeSpectrum s(n_max);
    for (const auto& [n, c] : entries) {
        if (n > 0) {
            throw DomainError("spectrum_from_pairs: mode " + std::to_string(n) +
                              " is derived; supply only n <= 0");
        }
        s.set_coeff(n, c);
    }
    return enforce_coupling(s);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classical and quantum dynamics of small oscillations of a vortex ring";

    py::register_exception<Error>(m, "VringError");

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readonly("R0", &PhysicalConstants::R0)
        .def_readonly("t0", &PhysicalConstants::t0)
        .def_readonly("m0", &PhysicalConstants::m0)
        .def_readonly("hbar", &PhysicalConstants::hbar)
        .def_readonly("p0", &PhysicalConstants::p0)
        .def_readonly("E0", &PhysicalConstants::E0)
        .def_readonly("Gamma0", &PhysicalConstants::Gamma0)
        .def_readonly("lambda0", &PhysicalConstants::lambda0)
        .def("__repr__", [](const PhysicalConstants& c) {
            return "PhysicalConstants(R0=" + format9(c.R0) + ", t0=" + format9(c.t0) +
                   ", m0=" + format9(c.m0) + ", hbar=" + format9(c.hbar) + ")";
        });

    m.def("derive_constants", &derive_constants, py::arg("R0"), py::arg("t0"),
          py::arg("m0"), py::arg("hbar"));

    m.def("dispersion", &dispersion, py::arg("n"),
          "omega(n) = n sqrt(n^2 - 1); zero for n = 0, +-1");
    m.def("coupling_coefficient", &coupling_coefficient, py::arg("n"),
          "c(n) = 2 [n sqrt(n^2 - 1) - n^2 + 1/2] for n >= 0");

    py::class_<ModeSpectrum>(m, "ModeSpectrum")
        .def(py::init<int>(), py::arg("n_max"))
        .def_property_readonly("n_max", &ModeSpectrum::n_max)
        .def("coeff", &ModeSpectrum::coeff, py::arg("n"))
        .def("set_coeff", &ModeSpectrum::set_coeff, py::arg("n"), py::arg("value"))
        .def("occupied_band", &ModeSpectrum::occupied_band);

    m.def("enforce_coupling", &enforce_coupling, py::arg("spectrum"));
    m.def("coupling_satisfied", &coupling_satisfied, py::arg("spectrum"),
          py::arg("tol") = 1e-10);
    m.def("modes_from_samples", &modes_from_samples, py::arg("samples"), py::arg("n_max"));
    m.def("samples_from_modes", &samples_from_modes, py::arg("spectrum"), py::arg("N"));
    m.def("spectrum_from_pairs", &spectrum_from_pairs, py::arg("n_max"), py::arg("entries"),
          "build a coupled spectrum from (n, coefficient) pairs, n <= 0");

    py::class_<PerturbationState>(m, "PerturbationState")
        .def(py::init<>())
        .def_readwrite("constants", &PerturbationState::constants)
        .def_readwrite("spectrum", &PerturbationState::spectrum)
        .def_readwrite("epsilon", &PerturbationState::epsilon)
        .def_readwrite("j_phi0", &PerturbationState::j_phi0)
        .def_readwrite("lambda_", &PerturbationState::lambda)
        .def_property(
            "q0",
            [](const PerturbationState& s) {
                return std::array<double, 3>{s.q0.x, s.q0.y, s.q0.z};
            },
            [](PerturbationState& s, const std::array<double, 3>& v) {
                s.q0 = {v[0], v[1], v[2]};
            })
        .def_property(
            "p",
            [](const PerturbationState& s) {
                return std::array<double, 3>{s.p.x, s.p.y, s.p.z};
            },
            [](PerturbationState& s, const std::array<double, 3>& v) {
                s.p = {v[0], v[1], v[2]};
            });

    m.def("load_state_json", &load_state_json, py::arg("path"));
    m.def("save_state_json", &save_state_json, py::arg("state"), py::arg("path"));
    m.def("parse_state_json", &parse_state_json, py::arg("text"));
    m.def("state_to_json_text", &state_to_json_text, py::arg("state"));

    m.def("evolve_modes", &evolve_modes, py::arg("spectrum"), py::arg("tau"));
    m.def("evolve_state", &evolve_state, py::arg("state"), py::arg("tau"));
    m.def("complex_tangent_field", &complex_tangent_field, py::arg("spectrum"),
          py::arg("tau"), py::arg("N"));
    m.def(
        "full_tangent_samples",
        [](const PerturbationState& s, double tau, int N) {
            return to_arrays(full_tangent_samples(s, tau, N));
        },
        py::arg("state"), py::arg("tau"), py::arg("N"));

    py::class_<FilamentCurve>(m, "FilamentCurve")
        .def_readonly("xi", &FilamentCurve::xi)
        .def_property_readonly(
            "points", [](const FilamentCurve& c) { return to_arrays(c.points); })
        .def_property_readonly(
            "tangent", [](const FilamentCurve& c) { return to_arrays(c.tangent); })
        .def_readonly("closure_violation", &FilamentCurve::closure_violation)
        .def_readonly("closed", &FilamentCurve::closed);

    m.def("reconstruct_curve", &reconstruct_curve, py::arg("state"), py::arg("tau"),
          py::arg("N"));
    m.def("curve_to_csv", &curve_to_csv, py::arg("curve"));
    m.def(
        "check_closure",
        [](const std::vector<std::array<double, 3>>& field) {
            const auto r = check_closure(from_arrays(field));
            py::dict out;
            out["pass"] = r.pass();
            out["cartesian"] = std::array<double, 3>{r.cartesian.x, r.cartesian.y,
                                                     r.cartesian.z};
            out["jrho_plus"] = r.jrho_plus;
            out["jrho_minus"] = r.jrho_minus;
            out["jz"] = r.jz;
            out["tolerance"] = r.tolerance;
            return out;
        },
        py::arg("field"));

    m.def(
        "step_linear",
        [](const ComplexField& f, double dtau, int band) {
            return step_linear(f, dtau, band);
        },
        py::arg("field"), py::arg("dtau"), py::arg("band_limit") = -1);
    m.def(
        "integrate_linear",
        [](const ComplexField& f, double tau_end, double dtau, int stride) {
            const auto traj = integrate_linear(f, tau_end, dtau, {.snapshot_stride = stride});
            return py::make_tuple(traj.times, traj.fields);
        },
        py::arg("field"), py::arg("tau_end"), py::arg("dtau"),
        py::arg("snapshot_stride") = 1);
    m.def(
        "integrate_nonlinear",
        [](const std::vector<std::array<double, 3>>& f, double tau_end, double dtau,
           int stride) {
            const auto traj =
                integrate_nonlinear(from_arrays(f), tau_end, dtau, {.snapshot_stride = stride});
            std::vector<std::vector<std::array<double, 3>>> fields;
            fields.reserve(traj.fields.size());
            for (const auto& snap : traj.fields) fields.push_back(to_arrays(snap));
            return py::make_tuple(traj.times, fields, traj.renormalizations,
                                  traj.max_norm_drift);
        },
        py::arg("field"), py::arg("tau_end"), py::arg("dtau"),
        py::arg("snapshot_stride") = 1);

    m.def(
        "impulse_f",
        [](const std::vector<std::array<double, 3>>& field, double tol) {
            const auto r = impulse_f(from_arrays(field), tol);
            py::dict out;
            out["f"] = std::array<double, 3>{r.f.x, r.f.y, r.f.z};
            out["f_perp"] = r.f_perp;
            out["mismatch"] = r.mismatch;
            return out;
        },
        py::arg("field"), py::arg("tol") = 1e-8);
    m.def(
        "momentum",
        [](const PerturbationState& s, int N) {
            const auto r = momentum(s, N);
            py::dict out;
            out["f"] = std::array<double, 3>{r.f.x, r.f.y, r.f.z};
            out["f_perp"] = r.f_perp;
            out["p"] = std::array<double, 3>{r.p.x, r.p.y, r.p.z};
            out["p_perp"] = r.p_perp;
            out["p_parallel"] = r.p_parallel;
            out["Gamma"] = r.Gamma;
            out["lambda"] = r.lambda;
            return out;
        },
        py::arg("state"), py::arg("N") = 512);
    m.def(
        "recover_circulation",
        [](cdouble p, cdouble j_minus1, const PhysicalConstants& c, double tol) {
            const auto r = recover_circulation(p, j_minus1, c, tol);
            return py::make_tuple(r.lambda, r.Gamma);
        },
        py::arg("p"), py::arg("j_minus1"), py::arg("constants"), py::arg("tol") = 1e-10);
    m.def(
        "constraints",
        [](const PerturbationState& s, double tau) {
            const auto r = constraints(s, tau);
            py::dict out;
            out["phi0"] = r.phi0;
            out["phi1"] = r.phi1;
            out["phi2"] = r.phi2;
            out["lambda_recovered"] =
                r.lambda_recovered ? py::cast(*r.lambda_recovered) : py::none();
            out["Gamma_recovered"] =
                r.Gamma_recovered ? py::cast(*r.Gamma_recovered) : py::none();
            return out;
        },
        py::arg("state"), py::arg("tau"));
    m.def("hamiltonian_h0", &hamiltonian_h0, py::arg("state"));
    m.def("hamiltonian", &hamiltonian, py::arg("state"), py::arg("ell") = 0.0);
    m.def(
        "verify_hamilton_equations",
        [](const PerturbationState& s, double tau_probe, int points, unsigned seed) {
            const auto r = verify_hamilton_equations(s, tau_probe, points, seed);
            py::dict out;
            out["max_error_dq"] = r.max_error_dq;
            out["max_error_dp"] = r.max_error_dp;
            out["max_error_series"] = r.max_error_series;
            out["max_error_fd"] = r.max_error_fd;
            out["ok"] = r.ok;
            return out;
        },
        py::arg("state"), py::arg("tau_probe"), py::arg("points") = 10,
        py::arg("seed") = 12345);
    m.def("canonical_energy_cutoff", &canonical_energy_cutoff, py::arg("curve"),
          py::arg("Gamma"), py::arg("delta"));
    m.def("canonical_energy_profile", &canonical_energy_profile, py::arg("curve"),
          py::arg("Gamma"), py::arg("deltas"));

    py::class_<FockVector>(m, "FockVector")
        .def(py::init<>())
        .def_readwrite("amp", &FockVector::amp)
        .def("norm", &FockVector::norm)
        .def_property_readonly("dim", &FockVector::dim);

    m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("dim"));
    m.def("fock_overlap", &fock_overlap, py::arg("a"), py::arg("b"));
    m.def("annihilation_eigenvalue", &annihilation_eigenvalue, py::arg("p"),
          py::arg("lambda_"), py::arg("constants"));
    m.def("make_physical_state", &make_physical_state, py::arg("p"), py::arg("lambda_"),
          py::arg("excitations"), py::arg("dim"), py::arg("constants"));
    m.def("annihilation_residual", &annihilation_residual, py::arg("state"));
    m.def("physical_amplitude", &physical_amplitude, py::arg("p"), py::arg("lambda_"),
          py::arg("excitations"), py::arg("phi"), py::arg("constants"));
    m.def("energy_eigenvalue", &energy_eigenvalue, py::arg("p"), py::arg("excitations"),
          py::arg("constants"));
    m.def(
        "matrix_hamiltonian_check",
        [](cdouble p, const std::vector<int>& ns, int dim, const PhysicalConstants& c) {
            const auto r = matrix_hamiltonian_check(p, ns, dim, c);
            py::dict out;
            out["eigenvalue"] = r.eigenvalue;
            out["residual"] = r.residual;
            out["ok"] = r.ok;
            return out;
        },
        py::arg("p"), py::arg("excitations"), py::arg("dim"), py::arg("constants"));
    m.def("phi0_expectation", &phi0_expectation, py::arg("p"), py::arg("lambda_"),
          py::arg("dim"), py::arg("constants"));
    m.def("circulation_density", &circulation_density, py::arg("p"), py::arg("excitations"),
          py::arg("lambda_grid"), py::arg("constants"));

    py::class_<QuantumState>(m, "QuantumState")
        .def_readonly("p", &QuantumState::p)
        .def_readonly("lambda_", &QuantumState::lambda)
        .def_readonly("excitations", &QuantumState::excitations)
        .def_readonly("mode1", &QuantumState::mode1);

    m.def(
        "run_invariant_suite",
        [](unsigned seed) {
            py::list out;
            for (const auto& r : run_invariant_suite(seed)) {
                py::dict item;
                item["name"] = r.name;
                item["pass"] = r.pass;
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("seed") = 12345);
}
