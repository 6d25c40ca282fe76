#include "fft.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace perispline::detail {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform; twiddles come from a per-call table indexed by
// j*(n/len) so rounding does not accumulate across butterfly stages.
void fft_pow2(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cd> tw(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = sign * 2.0 * std::numbers::pi *
                       static_cast<double>(j) / static_cast<double>(n);
    tw[j] = cd(std::cos(ang), std::sin(ang));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * tw[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// Chirp with exponent j^2 reduced mod 2n keeps the trig argument small even
// for large j (the chirp is 2n-periodic in j^2).
cd chirp(std::size_t j, std::size_t n, double sign) {
  const unsigned long long jj = static_cast<unsigned long long>(j);
  const unsigned long long e = (jj * jj) % (2ULL * n);
  const double ang = sign * std::numbers::pi * static_cast<double>(e) /
                     static_cast<double>(n);
  return cd(std::cos(ang), std::sin(ang));
}

std::vector<cd> bluestein(const std::vector<cd>& x, bool inverse) {
  const std::size_t n = x.size();
  const double sign = inverse ? 1.0 : -1.0;

  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cd> u(m, cd(0.0)), v(m, cd(0.0));
  for (std::size_t j = 0; j < n; ++j) {
    const cd w = chirp(j, n, sign);
    u[j] = x[j] * w;
    v[j] = std::conj(w);
    if (j != 0) v[m - j] = std::conj(w);
  }

  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
  fft_pow2(u, true);

  std::vector<cd> out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = u[k] * scale * chirp(k, n, sign);
  return out;
}

}  // namespace

std::vector<cd> dft(std::vector<cd> x, bool inverse) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  if (is_pow2(x.size())) {
    fft_pow2(x, inverse);
    return x;
  }
  return bluestein(x, inverse);
}

}  // namespace perispline::detail
