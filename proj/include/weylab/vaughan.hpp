#pragma once
#include <functional>
#include <vector>

#include "weylab/expsum.hpp"

namespace weylab {

// Three-way splitting of sum_{X < x <= V} Lambda(x) F(x):
//   S1 = sum_{d<=X} mu(d) sum_{z<=V/d} sum_{x<=V/(dz)}       Lambda(x) F(x d z)
//   S2 = sum_{d<=X} mu(d) sum_{z<=V/d} sum_{x<=min(X,V/(dz))} Lambda(x) F(x d z)
//   S3 = sum_{X<u<=V} tau_u sum_{X<x<=V/u} Lambda(x) F(x u),  tau_u = sum_{d|u, d<=X} mu(d)
// and the identity  direct = S1 - S2 - S3.
struct VaughanSplit {
    i64 V = 0, X = 0;
    cd S1, S2, S3;
    cd direct;
    double residual() const { return std::abs(direct - (S1 - S2 - S3)); }
};

// X defaults to floor(V^{2/5}) when X = 0 is passed.
VaughanSplit decompose(const std::function<cd(i64)>& F, i64 V, i64 X, const PrimeTable& T);

// tau_u for u in [1, upto] with divisor cut X.
std::vector<i64> tau_table(i64 upto, i64 X, const PrimeTable& T);

// sum_{x<=U, x=c mod W} | sum_{y<=V/x, y=c' mod W} e(alpha psi((x y - b)/W)) |
// together with the reference envelope V (log V)^{-B/(16 k^2 K^2)}.
// Requires c c' = b (mod W).
struct BilinearValue {
    double value = 0.0;
    double envelope = 0.0;
};
BilinearValue bilinear_type_i(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 U, i64 V,
                              i64 c, i64 cp, double A = 1.0, double B = 0.0);

// S3 band sum_{U1<=u<=U2} tau_u sum_{X<x<=V/u} Lambda(x) F(x u) with
// F(v) = e(alpha psi((v-b)/W)) 1_{v=b mod W}; X = floor(V^{2/5}).
cd bilinear_type_ii(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 U1, i64 U2, i64 V,
                    const PrimeTable& T);

// Reconciles the prime-weighted exponential sum computed directly against the
// route through the three-way splitting (with explicit corrections for prime
// powers and for primes below the cut).
struct MinorArcReport {
    Phase alpha{1, 1, 0.0};
    bool minor = false;        // classification under the log-power scheme
    double scheme_B = 1.0;
    i64 N = 0, V = 0, X = 0;
    cd direct;                 // weyl_sum with the prime weight
    cd reconstructed;          // splitting route, corrected and scaled
    cd prime_power_correction; // subtracted prime-power part (m >= 2)
    cd small_prime_part;       // added primes <= X part
    double residual = 0.0;     // |direct - reconstructed|
    double ratio_to_n = 0.0;   // |direct| / N
};

MinorArcReport verify_minor_arc(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 N,
                                const PrimeTable& T, double scheme_B = 1.0);

}  // namespace weylab
