#pragma once
#include <complex>
#include <vector>

#include "weylab/polycore.hpp"
#include "weylab/primetools.hpp"

namespace weylab {

using cd = std::complex<double>;

// Complex-valued function on Z_N. Transform convention:
//   hat f(r) = sum_{x in Z_N} f(x) e(-x r / N),  inverse carries the 1/N.
struct Signal {
    i64 N = 1;
    std::vector<cd> values;  // index x in [0, N)

    Signal() : values(1, cd(0, 0)) {}
    explicit Signal(i64 n) : N(n), values(size_t(n), cd(0, 0)) {}
    Signal(i64 n, std::vector<cd> v);
    cd sum() const;
};

Signal dft(const Signal& f);
Signal idft(const Signal& f);

// Cyclic convolution (f*g)(x) = sum_y f(y) g(x - y), via the transform.
Signal convolve(const Signal& f, const Signal& g);

// R = { r : |hat a(r)| >= eta }, ascending.
std::vector<i64> large_spectrum(const Signal& a, double eta);

// B = { x : || x r / N || <= eps for all r in R }, exact scan, ascending.
// || t || is the distance to the nearest integer.
std::vector<i64> bohr_set(const std::vector<i64>& R, double eps, i64 N);

// a' = a * beta * beta with beta = 1_B / |B|. The kernel 1_B * 1_B is
// computed as exact integers, then applied by direct convolution, so a >= 0
// gives a' >= 0 exactly and the mass drift stays at rounding level.
Signal smooth(const Signal& a, const std::vector<i64>& B);

struct LinftyReport {
    double max_abs = 0.0;
    double threshold = 0.0;  // 2 / N
    bool pass = false;
};
LinftyReport linfty_check(const Signal& ap);

// sum_r |hat a(r)|^rho; the lemma this probes needs rho > 2 (domain error at
// rho <= 2).
double restriction_constant(const Signal& a, double rho);

// One residue-class normalization pipeline run:
//   W = product of primes <= w (forced, or the largest with W^t <= n^{1/4}),
//   D = W^t, b = argmax over residues coprime to D of the log-weighted count
//   of P in the class (ties to the smallest b), A = {(x - b)/D >= 1}, N the
//   smallest prime in (2n/D, 4n/D], and a(z) = 1_A(z) lambda_{b,D}(z) / N on
//   Z_N.
struct WTrickResult {
    i64 W = 1;       // primorial
    i64 t = 1;       // low-degree trim of psi
    i64 D = 1;       // W^t, the modulus actually used
    i64 b = 1;
    std::vector<i64> A;
    i64 N = 2;
    Signal a;
    double mass = 0.0;       // sum of a
    double threshold = 0.0;  // delta_target / 8
    bool mass_ok = false;
    double class_weight = 0.0;      // sum of log x over the chosen class
    double class_threshold = 0.0;   // delta_target * n / (2 phi(D))
};

// forced_W = 0 picks the largest primorial with W^t <= n^{1/4}.
WTrickResult w_trick(const std::vector<i64>& P, i64 n, const IntPolynomial& psi,
                     double delta_target, const PrimeTable& T, i64 forced_W = 0);

}  // namespace weylab
