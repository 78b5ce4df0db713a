#include "quadwalk/fft.hpp"

#include <cmath>
#include <numbers>

namespace quadwalk {

int next_pow2(int n) {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

void fft_pow2(std::vector<Complex>& a, bool inverse) {
  const size_t n = a.size();
  if (n <= 1) return;

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (Complex& v : a) v *= inv;
  }
}

void fft2_pow2(std::vector<Complex>& grid, int n) {
  std::vector<Complex> buf(n);
  for (int r = 0; r < n; ++r) {
    buf.assign(grid.begin() + static_cast<size_t>(r) * n,
               grid.begin() + static_cast<size_t>(r + 1) * n);
    fft_pow2(buf);
    std::copy(buf.begin(), buf.end(), grid.begin() + static_cast<size_t>(r) * n);
  }
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) buf[r] = grid[static_cast<size_t>(r) * n + c];
    fft_pow2(buf);
    for (int r = 0; r < n; ++r) grid[static_cast<size_t>(r) * n + c] = buf[r];
  }
}

}  // namespace quadwalk
