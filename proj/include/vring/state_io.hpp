#pragma once

#include <string>

#include "vring/curve.hpp"
#include "vring/state.hpp"

namespace vring {

/// Reads a state file.  Schema (unknown keys are rejected):
/// {
///   "constants": {"R0":..,"t0":..,"m0":..,"hbar":..},
///   "epsilon":.., "j_phi0": 0,
///   "q0": [x,y,z], "p": [px,py,pz],
///   "modes": [{"n": <int <= 0>, "re":.., "im":..}, ...],
///   "lambda":.. (optional, default 1/pi),
///   "n_max":.. (optional, default 32)
/// }
/// Only the independent coefficients (n <= 0) may appear; the positive side
/// is derived from the coupling.  Malformed JSON raises ParseError with the
/// line and column of the defect.
PerturbationState load_state_json(const std::string& path);
PerturbationState parse_state_json(const std::string& text);

std::string state_to_json_text(const PerturbationState& state);
void save_state_json(const PerturbationState& state, const std::string& path);

/// Writes through a temp file plus rename so readers never see a partial file.
void atomic_write(const std::string& path, const std::string& content);

/// Fixed formatting for every floating-point value we emit: 9 significant
/// digits, locale-independent.
std::string format9(double value);

/// CSV rendering of a sampled curve, header "xi,rx,ry,rz,jx,jy,jz".
std::string curve_to_csv(const FilamentCurve& curve);

} // namespace vring
