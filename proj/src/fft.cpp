#include "weylab/fft.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

namespace weylab {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::domain_error("fft_pow2 requires power-of-two size");
    // bit reversal
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t half = len >> 1;
        // twiddles for this stage; shared by every block
        std::vector<cd> w(half);
        for (size_t j = 0; j < half; ++j) {
            double ang = sign * kTau * double(j) / double(len);
            w[j] = cd(std::cos(ang), std::sin(ang));
        }
        const i64 nblocks = i64(n / len);
#pragma omp parallel for schedule(static) if (n >= (size_t(1) << 14))
        for (i64 blk = 0; blk < nblocks; ++blk) {
            size_t i = size_t(blk) * len;
            for (size_t j = 0; j < half; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + half] * w[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
    if (inverse) {
        double inv = 1.0 / double(n);
        for (auto& x : a) x *= inv;
    }
}

// e(num/den) with the residue taken exactly mod den before any floating step.
static cd unit_root(i128 num, i64 den) {
    i64 r = i64(((num % den) + den) % den);
    double ang = kTau * double(r) / double(den);
    return cd(std::cos(ang), std::sin(ang));
}

std::vector<cd> dft_any(const std::vector<cd>& a, bool inverse) {
    const i64 n = i64(a.size());
    if (n == 0) throw std::domain_error("empty transform");
    if ((n & (n - 1)) == 0) {
        std::vector<cd> out(a);
        fft_pow2(out, inverse);
        if (inverse) {
            // fft_pow2 already divided by n
        }
        return out;
    }
    // Bluestein: X[r] = conj-chirp(r) * (u * v)[r],
    //   u[x] = a[x] * chirp(x), v[x] = conj chirp of |x|,
    //   chirp(x) = e(sign * x^2 / (2n)) with x^2 reduced mod 2n exactly.
    const double sign = inverse ? 1.0 : -1.0;
    const i64 m = next_pow2(2 * n - 1);
    std::vector<cd> chirp(static_cast<size_t>(n));
    for (i64 x = 0; x < n; ++x) {
        i128 sq = i128(x) * x;
        cd c = unit_root(sq, 2 * n);
        chirp[size_t(x)] = sign < 0 ? std::conj(c) : c;  // e(sign * x^2/(2n))
    }
    std::vector<cd> u(size_t(m), cd(0, 0)), v(size_t(m), cd(0, 0));
    for (i64 x = 0; x < n; ++x) u[size_t(x)] = a[size_t(x)] * chirp[size_t(x)];
    for (i64 x = 0; x < n; ++x) {
        cd c = std::conj(chirp[size_t(x)]);
        v[size_t(x)] = c;
        if (x > 0) v[size_t(m - x)] = c;
    }
    fft_pow2(u, false);
    fft_pow2(v, false);
    for (i64 i = 0; i < m; ++i) u[size_t(i)] *= v[size_t(i)];
    fft_pow2(u, true);
    std::vector<cd> out(static_cast<size_t>(n));
    for (i64 r = 0; r < n; ++r) out[size_t(r)] = chirp[size_t(r)] * u[size_t(r)];
    if (inverse) {
        double inv = 1.0 / double(n);
        for (auto& x : out) x *= inv;
    }
    return out;
}

}  // namespace weylab
