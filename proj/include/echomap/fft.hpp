#pragma once

#include <complex>
#include <vector>

namespace echomap {

// Exact-length discrete Fourier transform, any N >= 1.
// Power-of-two lengths use an iterative radix-2 kernel; other lengths go
// through Bluestein's chirp-z construction so bin centers stay at k*fs/N
// with no zero padding. The inverse includes the 1/N factor.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& x);

}  // namespace echomap
