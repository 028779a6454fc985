#include "echomap/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace echomap {

namespace {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 Cooley-Tukey, n a power of two.
void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein chirp-z: exact-length DFT for arbitrary n via one padded
// power-of-two convolution. Chirp angles are reduced with m^2 mod 2n so
// large indices lose no precision.
std::vector<cplx> bluestein(const std::vector<cplx>& x, bool inverse) {
  const std::size_t n = x.size();
  const double sign = inverse ? 1.0 : -1.0;

  std::vector<cplx> chirp(n);
  const long long two_n = 2 * static_cast<long long>(n);
  for (std::size_t m = 0; m < n; ++m) {
    const long long sq = (static_cast<long long>(m) * static_cast<long long>(m)) % two_n;
    const double ang = sign * std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n);
    chirp[m] = cplx(std::cos(ang), std::sin(ang));
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cplx> a(m, cplx(0.0, 0.0));
  std::vector<cplx> b(m, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i] = x[i] * chirp[i];
  b[0] = std::conj(chirp[0]);
  for (std::size_t i = 1; i < n; ++i) b[i] = b[m - i] = std::conj(chirp[i]);

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, true);

  std::vector<cplx> out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * scale * chirp[i];
  return out;
}

std::vector<cplx> transform(const std::vector<cplx>& x, bool inverse) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  std::vector<cplx> out;
  if (is_pow2(x.size())) {
    out = x;
    fft_pow2(out, inverse);
  } else {
    out = bluestein(x, inverse);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= scale;
  }
  return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& x) { return transform(x, false); }

std::vector<cplx> idft(const std::vector<cplx>& x) { return transform(x, true); }

}  // namespace echomap
