#pragma once

#include <complex>
#include <vector>

namespace hball::detail {

constexpr bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place unscaled radix-2 transform of a power-of-two-length buffer.
// sign = -1: forward (sum a_j e^{-2 pi i jm/n}); sign = +1: inverse kernel.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

}  // namespace hball::detail
