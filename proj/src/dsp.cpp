#include "murmurkit/dsp.hpp"

#include <cmath>

namespace murmur::dsp {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<cpx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const cpx wstep(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cpx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cpx u = a[i + k];
                cpx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wstep;
            }
        }
    }

    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

double bessel_i0(double x) {
    // power series; converges quickly for the window betas used here
    double sum = 1.0;
    double term = 1.0;
    double half = x / 2.0;
    for (int k = 1; k < 64; ++k) {
        term *= (half / k) * (half / k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double kaiser(double x, double beta) {
    if (x < -1.0 || x > 1.0) return 0.0;
    return bessel_i0(beta * std::sqrt(1.0 - x * x)) / bessel_i0(beta);
}

double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    double px = M_PI * x;
    return std::sin(px) / px;
}

PeakBin dominant_frequency(const std::vector<double>& x, double fs_hz) {
    std::size_t n = next_pow2(x.size());
    std::vector<cpx> buf(n, cpx(0.0, 0.0));
    for (std::size_t i = 0; i < x.size(); ++i) buf[i] = cpx(x[i], 0.0);
    fft(buf, false);
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 0; k <= n / 2; ++k) {
        double m = std::abs(buf[k]);
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    return PeakBin{static_cast<double>(best) * fs_hz / static_cast<double>(n), best_mag};
}

} // namespace murmur::dsp
