#pragma once
#include <complex>
#include <vector>

#include "weylab/checked.hpp"

namespace weylab {

using cd = std::complex<double>;

// In-place radix-2 FFT, size a power of two. forward uses kernel e(-xr/n).
void fft_pow2(std::vector<cd>& a, bool inverse);

// DFT of arbitrary length with the same kernel convention:
//   forward:  X[r] = sum_x a[x] e(-x r / n)
//   inverse:  x[t] = (1/n) sum_r A[r] e(+t r / n)
// Power-of-two sizes go straight to fft_pow2; other sizes use Bluestein's
// chirp transform with exact-residue chirp phases.
std::vector<cd> dft_any(const std::vector<cd>& a, bool inverse);

inline i64 next_pow2(i64 n) {
    i64 p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace weylab
