#include "vring/state.hpp"

#include <cmath>

#include "vring/errors.hpp"

namespace vring {

void validate_state(const PerturbationState& s) {
    if (!(s.constants.R0 > 0.0 && s.constants.t0 > 0.0 && s.constants.m0 > 0.0 &&
          s.constants.hbar > 0.0)) {
        throw DomainError("state: constants must be strictly positive");
    }
    if (s.j_phi0 != 0.0) {
        throw DomainError("state: only the j_phi0 = 0 branch is supported");
    }
    if (!std::isfinite(s.epsilon) || !std::isfinite(s.lambda)) {
        throw DomainError("state: non-finite epsilon or lambda");
    }
    if (!coupling_satisfied(s.spectrum)) {
        throw ConstraintError("state: mode coefficients violate the pair coupling");
    }
}

} // namespace vring
