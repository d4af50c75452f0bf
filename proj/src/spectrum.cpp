#include "vring/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vring/dispersion.hpp"
#include "vring/errors.hpp"

namespace vring {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kJ0ImagTol = 1e-12;
} // namespace

ModeSpectrum::ModeSpectrum(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw DomainError("ModeSpectrum: n_max must be >= 1");
    c_.assign(2 * static_cast<std::size_t>(n_max) + 1, {0.0, 0.0});
}

std::complex<double> ModeSpectrum::coeff(int n) const {
    if (n < -n_max_ || n > n_max_) return {0.0, 0.0};
    return c_[static_cast<std::size_t>(n + n_max_)];
}

void ModeSpectrum::set_coeff(int n, std::complex<double> value) {
    if (n < -n_max_ || n > n_max_) {
        throw DomainError("ModeSpectrum::set_coeff: |n| exceeds n_max " +
                          std::to_string(n_max_));
    }
    c_[static_cast<std::size_t>(n + n_max_)] = value;
}

int ModeSpectrum::occupied_band() const {
    int band = 0;
    for (int n = -n_max_; n <= n_max_; ++n) {
        if (coeff(n) != std::complex<double>{0.0, 0.0}) band = std::max(band, std::abs(n));
    }
    return band;
}

ModeSpectrum enforce_coupling(const ModeSpectrum& in) {
    const std::complex<double> j0 = in.coeff(0);
    if (std::abs(j0.imag()) > kJ0ImagTol) {
        throw ConstraintError("enforce_coupling: j_0 must be real (|Im| = " +
                              std::to_string(std::abs(j0.imag())) + ")");
    }
    ModeSpectrum out(in.n_max());
    out.set_coeff(0, {j0.real(), 0.0});
    for (int n = 1; n <= in.n_max(); ++n) {
        const std::complex<double> jm = in.coeff(-n);
        out.set_coeff(-n, jm);
        // j_1 = -conj(j_{-1}); for n >= 2, j_n = conj(j_{-n}) / c(n)
        out.set_coeff(n, std::conj(jm) * inverse_coupling_coefficient(n));
    }
    return out;
}

bool coupling_satisfied(const ModeSpectrum& s, double tol) {
    if (std::abs(s.coeff(0).imag()) > tol) return false;
    for (int n = 1; n <= s.n_max(); ++n) {
        const std::complex<double> expected =
            std::conj(s.coeff(-n)) * inverse_coupling_coefficient(n);
        const double scale = std::max(1.0, std::abs(expected));
        if (std::abs(s.coeff(n) - expected) > tol * scale) return false;
    }
    return true;
}

ModeSpectrum modes_from_samples(const std::vector<std::complex<double>>& samples,
                                int n_max) {
    const int N = static_cast<int>(samples.size());
    if (N < 2 * n_max + 2) {
        throw ResolutionError("modes_from_samples: need N >= 2 n_max + 2, got N = " +
                              std::to_string(N) + " for n_max = " + std::to_string(n_max));
    }
    for (const auto& s : samples) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw DomainError("modes_from_samples: non-finite sample");
        }
    }
    ModeSpectrum out(n_max);
    for (int n = -n_max; n <= n_max; ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < N; ++k) {
            // reduced phase index keeps the transform exact for band-limited data
            const long long raw = static_cast<long long>(n) * k % N;
            const long long idx = raw < 0 ? raw + N : raw;
            acc += samples[static_cast<std::size_t>(k)] *
                   std::polar(1.0, -kTwoPi * static_cast<double>(idx) /
                                       static_cast<double>(N));
        }
        out.set_coeff(n, acc / static_cast<double>(N));
    }
    return out;
}

std::vector<std::complex<double>> samples_from_modes(const ModeSpectrum& spectrum,
                                                     int N) {
    if (N < 2 * spectrum.n_max() + 2) {
        throw ResolutionError("samples_from_modes: need N >= 2 n_max + 2, got N = " +
                              std::to_string(N) + " for n_max = " +
                              std::to_string(spectrum.n_max()));
    }
    std::vector<std::complex<double>> out(static_cast<std::size_t>(N), {0.0, 0.0});
    for (int n = -spectrum.n_max(); n <= spectrum.n_max(); ++n) {
        const std::complex<double> cn = spectrum.coeff(n);
        if (cn == std::complex<double>{0.0, 0.0}) continue;
        for (int k = 0; k < N; ++k) {
            const long long raw = static_cast<long long>(n) * k % N;
            const long long idx = raw < 0 ? raw + N : raw;
            out[static_cast<std::size_t>(k)] +=
                cn * std::polar(1.0, kTwoPi * static_cast<double>(idx) /
                                         static_cast<double>(N));
        }
    }
    return out;
}

} // namespace vring
