#pragma once
// Minimal power-of-two complex FFT used by the dealiased nonlinear term.
// Twiddle tables are cached per size behind a mutex; the transform itself is
// straight radix-2 with a fixed operation order, so results are
// bit-deterministic for a given input.

#include <complex>
#include <cstddef>
#include <vector>

namespace szego::fft {

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// In-place DFT of x, whose size must be a power of two.
/// sign = -1: X_k = sum_j x_j e^{-2 pi i jk/L} (forward, unscaled)
/// sign = +1: X_j = sum_k x_k e^{+2 pi i jk/L} (inverse, unscaled)
void transform(std::vector<std::complex<double>>& x, int sign);

}  // namespace szego::fft
