#pragma once

#include <numbers>

namespace vring {

/// Dimensional inputs of the model and the scales derived from them.
///
/// The four inputs set length (R0), time (t0), mass (m0) and action (hbar).
/// Everything else is fixed exactly:
///   p0      = m0 R0 / t0        momentum of the unperturbed ring
///   E0      = m0 R0^2 / t0^2    energy scale
///   Gamma0  = R0^2 / (pi t0)    circulation of the unperturbed ring
///   lambda0 = 1/pi              dimensionless circulation of the ring
struct PhysicalConstants {
    double R0 = 1.0;
    double t0 = 1.0;
    double m0 = 1.0;
    double hbar = 1.0;

    double p0 = 1.0;
    double E0 = 1.0;
    double Gamma0 = 1.0 / std::numbers::pi;
    double lambda0 = 1.0 / std::numbers::pi;
};

/// Builds the constant record from the four inputs; throws DomainError
/// naming the offending constant when one is not strictly positive.
PhysicalConstants derive_constants(double R0, double t0, double m0, double hbar);

} // namespace vring
