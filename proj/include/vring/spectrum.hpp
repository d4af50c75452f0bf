#pragma once

#include <complex>
#include <vector>

namespace vring {

/// Fourier coefficients j_n of the complex tangent perturbation,
/// n in {-n_max, ..., n_max}.
///
/// The independent coefficients are j_0 (real) and j_{-1}, j_{-2}, ...;
/// the positive side is tied to them by
///   j_1 = -conj(j_{-1}),      j_n = conj(j_{-n}) / c(n)  for n >= 2,
/// with c(n) the pair coupling factor.  enforce_coupling() derives the
/// positive side; most constructors in this library call it for you.
class ModeSpectrum {
public:
    explicit ModeSpectrum(int n_max);

    int n_max() const { return n_max_; }

    std::complex<double> coeff(int n) const;
    void set_coeff(int n, std::complex<double> value);

    /// Max |n| with a nonzero coefficient (0 for the empty spectrum).
    int occupied_band() const;

private:
    int n_max_;
    std::vector<std::complex<double>> c_; // index n + n_max
};

/// Derives the positive-n side from the independent set and forces j_0
/// real.  Throws ConstraintError if Im j_0 exceeds 1e-12 going in.
ModeSpectrum enforce_coupling(const ModeSpectrum& in);

/// True when the positive side matches the independent side to `tol`.
bool coupling_satisfied(const ModeSpectrum& s, double tol = 1e-10);

/// Discrete transform of N samples of j(xi) = j_rho + i j_z on the uniform
/// grid xi_k = 2 pi k / N:  coeff[n] = (1/N) sum_k samples[k] e^{-i n xi_k}.
/// Requires N >= 2 n_max + 2 and finite samples.
ModeSpectrum modes_from_samples(const std::vector<std::complex<double>>& samples, int n_max);

/// Evaluates sum_n coeff[n] e^{i n xi} on the N-point grid.
/// Requires N >= 2 n_max + 2.
std::vector<std::complex<double>> samples_from_modes(const ModeSpectrum& spectrum, int N);

} // namespace vring
