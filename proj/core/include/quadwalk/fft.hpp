#pragma once

#include <vector>

#include "quadwalk/poly.hpp"

namespace quadwalk {

// In-place radix-2 FFT, size a power of two. Forward uses exp(-2*pi*i/n);
// inverse includes the 1/n factor.
void fft_pow2(std::vector<Complex>& a, bool inverse = false);

// 2-D forward FFT of a row-major n-by-n grid.
void fft2_pow2(std::vector<Complex>& grid, int n);

int next_pow2(int n);

}  // namespace quadwalk
