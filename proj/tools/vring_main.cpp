// Command-line front end: state ingestion, simulation runs, verification
// suites, CSV/JSON emission.  Exit codes: 0 success, 1 validation failure,
// 2 usage or input error.

#include <complex>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vring/curve.hpp"
#include "vring/dispersion.hpp"
#include "vring/dynamics.hpp"
#include "vring/errors.hpp"
#include "vring/integrators.hpp"
#include "vring/observables.hpp"
#include "vring/quantum.hpp"
#include "vring/state_io.hpp"
#include "vring/validate_suite.hpp"

namespace {

using vring::format9;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        vring::atomic_write(path, content);
    }
}

std::complex<double> parse_complex_pair(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw vring::ParseError("expected re,im pair, got \"" + text + "\"");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) {
            throw vring::ParseError("expected re,im pair, got \"" + text + "\"");
        }
    }
    return {re, im};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

int run_dispersion(int n_max, const std::string& output) {
    std::ostringstream os;
    os << "n,omega,coupling\n";
    for (int n = 0; n <= n_max; ++n) {
        os << n << ',' << format9(vring::dispersion(n)) << ','
           << format9(vring::coupling_coefficient(n)) << '\n';
    }
    emit(output, os.str());
    return kExitOk;
}

int run_evolve(const std::string& state_path, const std::string& mode, double tau_end,
               double dt, int n_grid, int snapshots, const std::string& output) {
    const vring::PerturbationState state = vring::load_state_json(state_path);
    std::ostringstream os;

    const int rows = std::max(1, snapshots);
    if (mode == "closed-form") {
        os << "tau,xi,re,im\n";
        for (int s = 0; s <= rows; ++s) {
            const double tau = tau_end * static_cast<double>(s) / static_cast<double>(rows);
            const auto field = vring::complex_tangent_field(state.spectrum, tau, n_grid);
            for (int k = 0; k < n_grid; ++k) {
                const double xi = 2.0 * std::numbers::pi * k / n_grid;
                os << format9(tau) << ',' << format9(xi) << ','
                   << format9(field[static_cast<std::size_t>(k)].real()) << ','
                   << format9(field[static_cast<std::size_t>(k)].imag()) << '\n';
            }
        }
    } else if (mode == "linear") {
        const long n_steps = std::lround(tau_end / dt);
        const int stride = std::max(1L, n_steps / rows);
        const auto initial = vring::samples_from_modes(state.spectrum, n_grid);
        const auto traj =
            vring::integrate_linear(initial, tau_end, dt, {.snapshot_stride = stride});
        os << "tau,xi,re,im\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            for (int k = 0; k < n_grid; ++k) {
                const double xi = 2.0 * std::numbers::pi * k / n_grid;
                os << format9(traj.times[i]) << ',' << format9(xi) << ','
                   << format9(traj.fields[i][static_cast<std::size_t>(k)].real()) << ','
                   << format9(traj.fields[i][static_cast<std::size_t>(k)].imag()) << '\n';
            }
        }
    } else if (mode == "nonlinear") {
        const long n_steps = std::lround(tau_end / dt);
        const int stride = std::max(1L, n_steps / rows);
        const auto initial = vring::full_tangent_samples(state, 0.0, n_grid);
        const auto traj =
            vring::integrate_nonlinear(initial, tau_end, dt, {.snapshot_stride = stride});
        os << "tau,xi,jx,jy,jz\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            for (int k = 0; k < n_grid; ++k) {
                const double xi = 2.0 * std::numbers::pi * k / n_grid;
                const vring::Vec3& j = traj.fields[i][static_cast<std::size_t>(k)];
                os << format9(traj.times[i]) << ',' << format9(xi) << ',' << format9(j.x)
                   << ',' << format9(j.y) << ',' << format9(j.z) << '\n';
            }
        }
    } else {
        throw vring::ParseError("unknown evolve mode: " + mode);
    }
    emit(output, os.str());
    return kExitOk;
}

int run_observables(const std::string& state_path, double tau, const std::string& output,
                    const std::string& curve_output, int n_grid) {
    const vring::PerturbationState loaded = vring::load_state_json(state_path);
    const vring::PerturbationState state = vring::evolve_state(loaded, tau);
    if (!curve_output.empty()) {
        emit(curve_output, vring::curve_to_csv(vring::reconstruct_curve(loaded, tau, n_grid)));
    }
    const auto imp = vring::momentum(state);
    const auto rep = vring::constraints(state, tau);

    nlohmann::json doc;
    doc["f"] = {imp.f.x, imp.f.y, imp.f.z};
    doc["p"] = {imp.p.x, imp.p.y, imp.p.z};
    doc["lambda"] = state.lambda;
    doc["Gamma"] = imp.Gamma;
    doc["phi0"] = rep.phi0;
    doc["phi1"] = rep.phi1;
    doc["phi2"] = rep.phi2;
    doc["H0"] = vring::hamiltonian_h0(state);
    emit(output, doc.dump(2) + "\n");
    return kExitOk;
}

int run_spectrum(const std::string& p_text, const std::string& modes_text,
                 const std::string& output) {
    const std::complex<double> p = parse_complex_pair(p_text);
    const std::vector<int> ns = parse_int_list(modes_text);
    const vring::PhysicalConstants constants;

    nlohmann::json doc;
    doc["energy"] = vring::energy_eigenvalue(p, ns, constants);
    nlohmann::json terms = nlohmann::json::array();
    terms.push_back({{"n", nullptr},
                     {"energy", std::norm(p) / (2.0 * constants.m0)}});
    for (int n : ns) {
        terms.push_back(
            {{"n", n}, {"energy", constants.hbar / constants.t0 * vring::dispersion(n)}});
    }
    doc["terms"] = terms;
    emit(output, doc.dump(2) + "\n");
    return kExitOk;
}

int run_circulation_density(const std::string& p_text, double lambda_min,
                            double lambda_max, int steps, const std::string& output) {
    if (steps < 2) throw vring::ParseError("--steps must be >= 2");
    const std::complex<double> p = parse_complex_pair(p_text);
    const vring::PhysicalConstants constants;
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) {
        grid.push_back(lambda_min +
                       (lambda_max - lambda_min) * static_cast<double>(i) /
                           static_cast<double>(steps - 1));
    }
    const auto density = vring::circulation_density(p, {}, grid, constants);
    std::ostringstream os;
    os << "lambda,Gamma,density\n";
    for (const auto& [lambda, d] : density) {
        const double Gamma = lambda * constants.R0 * constants.R0 / constants.t0;
        os << format9(lambda) << ',' << format9(Gamma) << ',' << format9(d) << '\n';
    }
    emit(output, os.str());
    return kExitOk;
}

int run_energy_divergence(const std::string& state_path, const std::string& deltas_text,
                          int n_grid, bool has_gamma, double Gamma_flag,
                          const std::string& output) {
    vring::PerturbationState state;
    if (!state_path.empty()) {
        state = vring::load_state_json(state_path);
    } else {
        state.q0 = {state.constants.R0, 0.0, 0.0};
    }
    const auto curve = vring::reconstruct_curve(state, 0.0, n_grid);
    const double Gamma = has_gamma ? Gamma_flag : vring::circulation(state);
    const std::vector<double> deltas = parse_double_list(deltas_text);
    const auto energies = vring::canonical_energy_profile(curve, Gamma, deltas);
    std::ostringstream os;
    os << "delta,E\n";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        os << format9(deltas[i]) << ',' << format9(energies[i]) << '\n';
    }
    emit(output, os.str());
    return kExitOk;
}

int run_validate(const std::string& state_path, unsigned seed) {
    std::vector<vring::CheckResult> results;
    if (!state_path.empty()) {
        results = vring::validate_state_checks(vring::load_state_json(state_path));
    } else {
        results = vring::run_invariant_suite(seed);
    }
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
        std::cout << '\n';
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
    return all_pass ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vring: classical and quantum dynamics of small oscillations of a "
                 "vortex ring"};
    app.require_subcommand(1);

    // dispersion
    auto* cmd_dispersion = app.add_subcommand("dispersion", "emit n, omega, coupling CSV");
    int n_max = 32;
    std::string output;
    cmd_dispersion->add_option("--n-max", n_max, "largest mode index")
        ->check(CLI::Range(0, 100000));
    cmd_dispersion->add_option("--output,-o", output, "output path (default stdout)");

    // evolve
    auto* cmd_evolve = app.add_subcommand("evolve", "time-step or closed-form evolution");
    std::string state_path;
    std::string mode = "linear";
    double tau_end = 1.0;
    double dt = 1e-3;
    int n_grid = 128;
    int snapshots = 10;
    cmd_evolve->add_option("--state", state_path, "state JSON file")->required();
    cmd_evolve->add_option("--mode", mode, "linear | nonlinear | closed-form")
        ->check(CLI::IsMember({"linear", "nonlinear", "closed-form"}));
    cmd_evolve->add_option("--tau-end", tau_end, "end time");
    cmd_evolve->add_option("--dt", dt, "time step");
    cmd_evolve->add_option("--n-grid", n_grid, "grid size");
    cmd_evolve->add_option("--snapshots", snapshots, "snapshot count");
    cmd_evolve->add_option("--output,-o", output, "output path (default stdout)");

    // observables
    auto* cmd_obs = app.add_subcommand("observables", "impulse, constraints and energy");
    double tau = 0.0;
    std::string curve_output;
    int curve_grid = 256;
    cmd_obs->add_option("--state", state_path, "state JSON file")->required();
    cmd_obs->add_option("--tau", tau, "evolution time");
    cmd_obs->add_option("--curve-output", curve_output,
                        "also write the reconstructed curve CSV here");
    cmd_obs->add_option("--curve-grid", curve_grid, "grid size for the curve CSV");
    cmd_obs->add_option("--output,-o", output, "output path (default stdout)");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "quantum energy eigenvalue");
    std::string p_text = "0,0";
    std::string modes_text;
    cmd_spectrum->add_option("--p", p_text, "transverse momentum re,im");
    cmd_spectrum->add_option("--modes", modes_text, "excitations, e.g. 2,2,3");
    cmd_spectrum->add_option("--output,-o", output, "output path (default stdout)");

    // circulation-density
    auto* cmd_density = app.add_subcommand("circulation-density",
                                           "quantum circulation probability density");
    double lambda_min = 0.1;
    double lambda_max = 1.0;
    int steps = 50;
    cmd_density->add_option("--p", p_text, "transverse momentum re,im");
    cmd_density->add_option("--lambda-min", lambda_min, "grid start");
    cmd_density->add_option("--lambda-max", lambda_max, "grid end");
    cmd_density->add_option("--steps", steps, "grid points");
    cmd_density->add_option("--output,-o", output, "output path (default stdout)");

    // energy-divergence
    auto* cmd_energy = app.add_subcommand("energy-divergence",
                                          "cutoff-regularized canonical energy");
    std::string deltas_text = "0.1,0.05,0.025";
    int energy_grid = 16384;
    double Gamma_flag = 0.0;
    cmd_energy->add_option("--state", state_path, "state JSON file (default: unit ring)");
    cmd_energy->add_option("--deltas", deltas_text, "comma-separated cutoffs");
    cmd_energy->add_option("--n-grid", energy_grid, "grid size");
    cmd_energy->add_option("--gamma", Gamma_flag, "override circulation");
    cmd_energy->add_option("--output,-o", output, "output path (default stdout)");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "state checks / invariant suite");
    unsigned seed = 12345;
    cmd_validate->add_option("--state", state_path, "state JSON file (omit for suite)");
    cmd_validate->add_option("--seed", seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_dispersion->parsed()) return run_dispersion(n_max, output);
        if (cmd_evolve->parsed()) {
            return run_evolve(state_path, mode, tau_end, dt, n_grid, snapshots, output);
        }
        if (cmd_obs->parsed()) {
            return run_observables(state_path, tau, output, curve_output, curve_grid);
        }
        if (cmd_spectrum->parsed()) return run_spectrum(p_text, modes_text, output);
        if (cmd_density->parsed()) {
            return run_circulation_density(p_text, lambda_min, lambda_max, steps, output);
        }
        if (cmd_energy->parsed()) {
            return run_energy_divergence(state_path, deltas_text, energy_grid,
                                         cmd_energy->count("--gamma") > 0, Gamma_flag,
                                         output);
        }
        if (cmd_validate->parsed()) return run_validate(state_path, seed);
    } catch (const vring::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vring::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
