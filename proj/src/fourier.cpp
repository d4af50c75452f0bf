#include "vring/fourier.hpp"

#include <cmath>
#include <numbers>

#include "vring/errors.hpp"

namespace vring::fourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey, forward sign convention.
void fft_pow2(std::vector<cdouble>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        const cdouble wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble u = a[i + k];
                const cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<cdouble> dft_direct(const std::vector<cdouble>& x) {
    const std::size_t n = x.size();
    std::vector<cdouble> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cdouble acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            // exact reduced angle keeps the direct path as accurate as the FFT
            const std::size_t idx = (m * k) % n;
            acc += x[k] * std::polar(1.0, -kTwoPi * static_cast<double>(idx) /
                                              static_cast<double>(n));
        }
        out[m] = acc;
    }
    return out;
}

} // namespace

std::vector<cdouble> dft(const std::vector<cdouble>& x) {
    if (x.empty()) throw DomainError("dft: empty input");
    if (is_power_of_two(x.size())) {
        std::vector<cdouble> a = x;
        fft_pow2(a);
        return a;
    }
    return dft_direct(x);
}

std::vector<cdouble> idft(const std::vector<cdouble>& X) {
    std::vector<cdouble> tmp(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) tmp[i] = std::conj(X[i]);
    tmp = dft(tmp);
    const double inv = 1.0 / static_cast<double>(X.size());
    for (auto& v : tmp) v = std::conj(v) * inv;
    return tmp;
}

int wavenumber(int m, int N) { return m <= (N - 1) / 2 ? m : m - N; }

std::vector<cdouble> derivative(const std::vector<cdouble>& samples) {
    const int N = static_cast<int>(samples.size());
    std::vector<cdouble> hat = dft(samples);
    for (int m = 0; m < N; ++m) {
        const int k = wavenumber(m, N);
        if (2 * std::abs(k) == N) {
            hat[m] = 0.0; // Nyquist has no well-defined first derivative
        } else {
            hat[m] *= cdouble(0.0, static_cast<double>(k));
        }
    }
    return idft(hat);
}

std::vector<cdouble> second_derivative(const std::vector<cdouble>& samples,
                                       int band_limit) {
    const int N = static_cast<int>(samples.size());
    std::vector<cdouble> hat = dft(samples);
    for (int m = 0; m < N; ++m) {
        const int k = wavenumber(m, N);
        if (band_limit >= 0 && std::abs(k) > band_limit) {
            hat[m] = 0.0;
        } else {
            hat[m] *= -static_cast<double>(k) * static_cast<double>(k);
        }
    }
    return idft(hat);
}

std::vector<cdouble> band_filter(const std::vector<cdouble>& samples, int band_limit) {
    const int N = static_cast<int>(samples.size());
    std::vector<cdouble> hat = dft(samples);
    for (int m = 0; m < N; ++m) {
        if (std::abs(wavenumber(m, N)) > band_limit) hat[m] = 0.0;
    }
    return idft(hat);
}

std::vector<cdouble> kernel_integral(const std::vector<cdouble>& samples) {
    const int N = static_cast<int>(samples.size());
    std::vector<cdouble> hat = dft(samples);
    const double inv = 1.0 / static_cast<double>(N);
    for (auto& v : hat) v *= inv; // true Fourier coefficients

    const cdouble mean = hat[0];
    std::vector<cdouble> anti(hat.size());
    cdouble offset{0.0, 0.0}; // sum over m != 0 of hat_m / (i k_m)
    anti[0] = 0.0;
    for (int m = 1; m < N; ++m) {
        const int k = wavenumber(m, N);
        anti[m] = hat[m] / cdouble(0.0, static_cast<double>(k));
        offset += anti[m];
    }

    // A(xi_k) = sum_{m != 0} hat_m e^{i k xi} / (i k): inverse transform of anti
    std::vector<cdouble> A(anti.size());
    for (std::size_t i = 0; i < anti.size(); ++i) A[i] = std::conj(anti[i]);
    A = dft(A);
    for (auto& v : A) v = std::conj(v);

    // I(xi) = -[ mean (2pi - xi) + sum_{m != 0} hat_m (1 - e^{i k xi}) / (i k) ]
    std::vector<cdouble> out(samples.size());
    for (int j = 0; j < N; ++j) {
        const double xi = kTwoPi * static_cast<double>(j) / static_cast<double>(N);
        out[j] = -(mean * (kTwoPi - xi) + offset - A[j]);
    }
    return out;
}

cdouble mean(const std::vector<cdouble>& samples) {
    cdouble acc{0.0, 0.0};
    for (const auto& v : samples) acc += v;
    return acc / static_cast<double>(samples.size());
}

} // namespace vring::fourier
