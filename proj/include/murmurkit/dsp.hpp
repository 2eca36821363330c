#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace murmur::dsp {

using cpx = std::complex<double>;

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 FFT; data.size() must be a power of two.
// inverse = true applies the conjugate transform and divides by N.
void fft(std::vector<cpx>& data, bool inverse);

// Zeroth-order modified Bessel function of the first kind (series form).
double bessel_i0(double x);

// Kaiser window value for |x| <= 1 (0 outside).
double kaiser(double x, double beta);

// Normalized sinc: sin(pi x) / (pi x).
double sinc(double x);

// Magnitude of the dominant FFT bin of a real signal, and its frequency in
// Hz. Handy test-side helper for resampler and filter contracts.
struct PeakBin {
    double freq_hz;
    double magnitude;
};
PeakBin dominant_frequency(const std::vector<double>& x, double fs_hz);

} // namespace murmur::dsp
