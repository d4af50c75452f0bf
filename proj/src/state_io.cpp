#include "vring/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vring/errors.hpp"

namespace vring {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at_offset(const std::string& text, std::size_t byte,
                                 const std::string& message) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError("state JSON: " + message + " at line " + std::to_string(line) +
                     ", column " + std::to_string(column));
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key())) {
            throw ParseError("state JSON: unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) {
        throw ParseError("state JSON: missing key \"" + key + "\" in " + where);
    }
    if (!obj[key].is_number()) {
        throw ParseError("state JSON: key \"" + key + "\" in " + where +
                         " must be a number");
    }
    return obj[key].get<double>();
}

Vec3 vec3_field(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != 3) {
        throw ParseError("state JSON: key \"" + key + "\" must be a 3-element array");
    }
    for (const auto& v : obj[key]) {
        if (!v.is_number()) {
            throw ParseError("state JSON: key \"" + key + "\" must hold numbers");
        }
    }
    return {obj[key][0].get<double>(), obj[key][1].get<double>(),
            obj[key][2].get<double>()};
}

} // namespace

PerturbationState parse_state_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at_offset(text, e.byte > 0 ? e.byte - 1 : 0, "malformed document");
    }
    if (!root.is_object()) throw ParseError("state JSON: top level must be an object");

    reject_unknown_keys(root,
                        {"constants", "epsilon", "j_phi0", "q0", "p", "modes", "lambda",
                         "n_max"},
                        "the top-level object");
    for (const char* key : {"constants", "epsilon", "j_phi0", "q0", "p", "modes"}) {
        if (!root.contains(key)) {
            throw ParseError(std::string("state JSON: missing key \"") + key + "\"");
        }
    }

    const json& jc = root["constants"];
    if (!jc.is_object()) throw ParseError("state JSON: \"constants\" must be an object");
    reject_unknown_keys(jc, {"R0", "t0", "m0", "hbar"}, "\"constants\"");
    const PhysicalConstants constants =
        derive_constants(number_field(jc, "R0", "constants"),
                         number_field(jc, "t0", "constants"),
                         number_field(jc, "m0", "constants"),
                         number_field(jc, "hbar", "constants"));

    const json& jm = root["modes"];
    if (!jm.is_array()) throw ParseError("state JSON: \"modes\" must be an array");
    int max_abs_n = 1;
    for (const auto& entry : jm) {
        if (!entry.is_object()) throw ParseError("state JSON: mode entries must be objects");
        reject_unknown_keys(entry, {"n", "re", "im"}, "a mode entry");
        if (!entry.contains("n") || !entry["n"].is_number_integer()) {
            throw ParseError("state JSON: mode entry needs an integer \"n\"");
        }
        const int n = entry["n"].get<int>();
        if (n > 0) {
            throw ParseError("state JSON: mode n = " + std::to_string(n) +
                             " is derived; supply only n <= 0");
        }
        max_abs_n = std::max(max_abs_n, -n);
    }

    int n_max = 32;
    if (root.contains("n_max")) {
        if (!root["n_max"].is_number_integer()) {
            throw ParseError("state JSON: \"n_max\" must be an integer");
        }
        n_max = root["n_max"].get<int>();
        if (n_max < 1) throw ParseError("state JSON: \"n_max\" must be >= 1");
    }
    n_max = std::max(n_max, max_abs_n);

    ModeSpectrum spectrum(n_max);
    std::set<int> seen;
    for (const auto& entry : jm) {
        const int n = entry["n"].get<int>();
        if (seen.contains(n)) {
            throw ParseError("state JSON: duplicate mode n = " + std::to_string(n));
        }
        seen.insert(n);
        spectrum.set_coeff(n, {number_field(entry, "re", "a mode entry"),
                               number_field(entry, "im", "a mode entry")});
    }

    PerturbationState state;
    state.constants = constants;
    state.spectrum = enforce_coupling(spectrum);
    state.q0 = vec3_field(root, "q0");
    state.p = vec3_field(root, "p");
    state.epsilon = number_field(root, "epsilon", "the top-level object");
    state.j_phi0 = number_field(root, "j_phi0", "the top-level object");
    if (state.j_phi0 != 0.0) {
        throw ParseError("state JSON: only j_phi0 = 0 is supported");
    }
    state.lambda = root.contains("lambda")
                       ? number_field(root, "lambda", "the top-level object")
                       : constants.lambda0;
    validate_state(state);
    return state;
}

PerturbationState load_state_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open state file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string format9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string state_to_json_text(const PerturbationState& state) {
    json root;
    root["constants"] = {{"R0", state.constants.R0},
                         {"t0", state.constants.t0},
                         {"m0", state.constants.m0},
                         {"hbar", state.constants.hbar}};
    root["epsilon"] = state.epsilon;
    root["j_phi0"] = state.j_phi0;
    root["lambda"] = state.lambda;
    root["n_max"] = state.spectrum.n_max();
    root["q0"] = {state.q0.x, state.q0.y, state.q0.z};
    root["p"] = {state.p.x, state.p.y, state.p.z};
    json modes = json::array();
    for (int n = 0; n >= -state.spectrum.n_max(); --n) {
        const auto c = state.spectrum.coeff(n);
        if (c == std::complex<double>{0.0, 0.0}) continue;
        modes.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
    }
    root["modes"] = modes;
    return root.dump(2) + "\n";
}

void save_state_json(const PerturbationState& state, const std::string& path) {
    atomic_write(path, state_to_json_text(state));
}

std::string curve_to_csv(const FilamentCurve& curve) {
    std::ostringstream os;
    os << "xi,rx,ry,rz,jx,jy,jz\n";
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
        const Vec3& r = curve.points[k];
        const Vec3& j = curve.tangent[k];
        os << format9(curve.xi[k]) << ',' << format9(r.x) << ',' << format9(r.y) << ','
           << format9(r.z) << ',' << format9(j.x) << ',' << format9(j.y) << ','
           << format9(j.z) << '\n';
    }
    return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace vring
