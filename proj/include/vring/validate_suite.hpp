#pragma once

#include <string>
#include <vector>

#include "vring/state.hpp"

namespace vring {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Library-wide invariant suite: transform exactness, coupling and closure
/// identities, evolution properties, oracle equivalence, impulse and
/// conservation identities, bracket algebra, energy divergence and the
/// quantum layer.  Deterministic for a fixed seed.
std::vector<CheckResult> run_invariant_suite(unsigned seed = 12345);

/// Per-state checks: constants, coupling, closure, curve closure,
/// constraints and circulation recovery.
std::vector<CheckResult> validate_state_checks(const PerturbationState& state);

} // namespace vring
