#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "vring/constants.hpp"

namespace vring {

/// Truncated Fock vector of oscillator mode 1; amp[m] is the amplitude on
/// the m-quantum level, m = 0 ... dim-1.
struct FockVector {
    std::vector<std::complex<double>> amp;

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const;
};

std::complex<double> fock_overlap(const FockVector& a, const FockVector& b);

/// a |m> = sqrt(m) |m-1>.
FockVector apply_annihilation(const FockVector& v);

/// a+ |m> = sqrt(m+1) |m+1>; the component leaving the truncation is dropped.
FockVector apply_creation(const FockVector& v);

/// Coherent state amplitudes e^{-|alpha|^2/2} alpha^m / sqrt(m!).
/// Requires dim >= 16 and |alpha|^2 <= dim/4; a norm deficit above 1e-8
/// is a TruncationError.
FockVector coherent_state(std::complex<double> alpha, int dim);

/// Annihilation eigenvalue attached to transverse momentum p and
/// dimensionless circulation lambda:
///   alpha(p, lambda) = p / (2 pi lambda sqrt(hbar p0 / R0)).
std::complex<double> annihilation_eigenvalue(std::complex<double> p, double lambda,
                                             const PhysicalConstants& constants);

/// Quantum state: transverse momentum label, circulation, excitation
/// multiset (every n_j >= 2) and the displaced mode-1 factor.
struct QuantumState {
    std::complex<double> p;
    double lambda = PhysicalConstants{}.lambda0;
    std::vector<int> excitations;
    FockVector mode1;
    PhysicalConstants constants;
};

/// Builds the state whose mode-1 factor is the coherent vector at
/// alpha(p, lambda).
QuantumState make_physical_state(std::complex<double> p, double lambda,
                                 std::vector<int> excitations, int dim,
                                 const PhysicalConstants& constants);

/// || (p - 2 pi lambda p0 sqrt(hbar/(t0 E0)) a) v || / || p v || on the
/// mode-1 factor.  Higher-mode excitations commute past a and do not enter.
double annihilation_residual(const QuantumState& state);

/// Amplitude to find the system at circulation lambda:
///   phi * exp[ -(|p|^2 R0 / (8 hbar p0)) (lambda0/lambda - 1)^2 ].
/// lambda = 0 is a DomainError.
std::complex<double> physical_amplitude(std::complex<double> p, double lambda,
                                        const std::vector<int>& excitations,
                                        std::complex<double> phi,
                                        const PhysicalConstants& constants);

/// Energy eigenvalue |p|^2/(2 m0) + (hbar/t0) sum_j n_j sqrt(n_j^2 - 1);
/// the multiset counts multiplicity, every n_j >= 2.
double energy_eigenvalue(std::complex<double> p, const std::vector<int>& excitations,
                         const PhysicalConstants& constants);

struct HamiltonianCheck {
    double eigenvalue = 0.0; // expected from energy_eigenvalue
    double residual = 0.0;   // relative ||H v - E v||
    bool ok = false;
};

/// Builds the excited coherent vector a+_{n_1} ... a+_{n_k} |coherent> in a
/// dense truncated tensor space (mode 1 at dimension dim, each excited mode
/// a small factor), applies the Hamiltonian matrix and verifies the
/// eigenvector property.  Requires k <= 3, n_j in [2,6], dim >= 32.
HamiltonianCheck matrix_hamiltonian_check(std::complex<double> p,
                                          const std::vector<int>& excitations, int dim,
                                          const PhysicalConstants& constants);

/// <psi| p j+ - conj(p) j |psi> with j = sqrt(hbar/(t0 E0)) a, on the
/// coherent state at alpha(p, lambda).  Vanishes when the coherent label is
/// aligned with p, reproducing the classical constraint in expectation.
std::complex<double> phi0_expectation(std::complex<double> p, double lambda, int dim,
                                      const PhysicalConstants& constants);

/// Same expectation on an explicitly chosen coherent label alpha.
std::complex<double> phi0_expectation_displaced(std::complex<double> p,
                                                std::complex<double> alpha, int dim,
                                                const PhysicalConstants& constants);

/// Unnormalized probability density |amplitude|^2 over a lambda grid (with
/// phi = 1).  The grid must not contain 0.  Returns (lambda, density) pairs.
std::vector<std::pair<double, double>> circulation_density(
    std::complex<double> p, const std::vector<int>& excitations,
    const std::vector<double>& lambda_grid, const PhysicalConstants& constants);

} // namespace vring
