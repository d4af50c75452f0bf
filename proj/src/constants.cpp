#include "vring/constants.hpp"

#include <string>

#include "vring/errors.hpp"

namespace vring {

PhysicalConstants derive_constants(double R0, double t0, double m0, double hbar) {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw DomainError(std::string("derive_constants: ") + name +
                              " must be strictly positive");
        }
    };
    require_positive(R0, "R0");
    require_positive(t0, "t0");
    require_positive(m0, "m0");
    require_positive(hbar, "hbar");

    PhysicalConstants c;
    c.R0 = R0;
    c.t0 = t0;
    c.m0 = m0;
    c.hbar = hbar;
    c.p0 = m0 * R0 / t0;
    c.E0 = m0 * R0 * R0 / (t0 * t0);
    c.lambda0 = 1.0 / std::numbers::pi;
    c.Gamma0 = c.lambda0 * R0 * R0 / t0;
    return c;
}

} // namespace vring
