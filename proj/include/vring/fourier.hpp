#pragma once

#include <complex>
#include <vector>

namespace vring::fourier {

using cdouble = std::complex<double>;

/// Unnormalized forward transform: X[m] = sum_k x[k] exp(-2 pi i m k / N).
/// Radix-2 FFT for power-of-two N, direct evaluation otherwise.
std::vector<cdouble> dft(const std::vector<cdouble>& x);

/// Inverse of dft with the 1/N normalization folded in.
std::vector<cdouble> idft(const std::vector<cdouble>& X);

/// Signed wavenumber of bin m for an N-point grid, in [-N/2, N/2).
int wavenumber(int m, int N);

/// Spectral d/dxi on the 2pi-periodic grid; the Nyquist bin is zeroed.
std::vector<cdouble> derivative(const std::vector<cdouble>& samples);

/// Spectral d^2/dxi^2.  When band_limit >= 0 the operator is restricted to
/// |k| <= band_limit: higher bins contribute nothing.  Restricting keeps
/// explicit time stepping stable when the grid resolves modes far above
/// the band the data lives in.
std::vector<cdouble> second_derivative(const std::vector<cdouble>& samples,
                                       int band_limit = -1);

/// Zeroes every bin with |k| > band_limit.
std::vector<cdouble> band_filter(const std::vector<cdouble>& samples, int band_limit);

/// I(xi_k) = integral over [0,2pi) of [xi_k - eta] f(eta) d eta, where [x]
/// is the integer part of x/(2pi); equals -integral from xi_k to 2pi of f.
/// Exact for band-limited f.
std::vector<cdouble> kernel_integral(const std::vector<cdouble>& samples);

/// Mean of the samples (the k = 0 Fourier coefficient).
cdouble mean(const std::vector<cdouble>& samples);

} // namespace vring::fourier
