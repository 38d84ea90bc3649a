#pragma once
#include <complex>
#include <cstdint>

#include "weylab/polycore.hpp"
#include "weylab/primetools.hpp"

namespace weylab {

using cd = std::complex<double>;

// e(t) = exp(2 pi i t)
cd e_of(double t);

// alpha = a/q + theta with 1 <= a <= q, gcd(a, q) = 1, |theta| < 1. a = q
// stands for the zero residue (alpha = theta mod 1). The rational part is
// always handled in exact modular arithmetic; only theta touches floating
// point.
struct Phase {
    i64 a = 1, q = 1;
    double theta = 0.0;

    Phase(i64 a_, i64 q_, double theta_ = 0.0);
    // Dirichlet approximation with denominator cap Q: |theta| <= 1/(q(Q+1)).
    static Phase from_real(double alpha, i64 Q = 1'000'000);
    double real_value() const { return double(a) / double(q) + theta; }
};

enum class WeightKind { Unit, Poly, PrimeWeight, DeltaPrime };

// Term weights for exponential sums:
//   Unit           w(x) = 1
//   Poly(h)        w(x) = h(x)
//   PrimeWeight    w(x) = lambda_{b,W}(x)
//   DeltaPrime     w(x) = psiDelta(x-1) * lambda_{b,W}(x)
struct Weight {
    WeightKind kind = WeightKind::Unit;
    GenPolynomial h;
    i64 b = 1, W = 1;

    static Weight unit() { return {}; }
    static Weight poly(GenPolynomial p) { return {WeightKind::Poly, std::move(p), 1, 1}; }
    static Weight prime(i64 b, i64 W) { return {WeightKind::PrimeWeight, GenPolynomial{}, b, W}; }
    static Weight delta_prime(i64 b, i64 W) { return {WeightKind::DeltaPrime, GenPolynomial{}, b, W}; }
    bool needs_sieve() const { return kind == WeightKind::PrimeWeight || kind == WeightKind::DeltaPrime; }
};

// Complete sum G(a, q) = sum_{r=1}^{q} e(a psi(r) / q), exact residues.
cd complete_sum(const IntPolynomial& psi, i64 a, i64 q);

// Same restricted to residues with gcd(W r + b, q) = 1.
cd restricted_complete_sum(const IntPolynomial& psi, i64 a, i64 q, i64 b, i64 W);

// sum_{x=1}^{N} w(x) e(alpha psi(x)). Rational part via Horner mod q; theta
// part via compensated reduction of theta * psi(x) mod 1. Deterministic
// blocked reduction. T required for prime-weighted kinds.
cd weyl_sum(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w,
            const PrimeTable* T = nullptr);

// Resolved weights w(1..N) as a dense table (index 0 unused).
std::vector<double> weight_values(const IntPolynomial& psi, const Weight& w, i64 N,
                                  const PrimeTable* T = nullptr);

// Major-arc main term:
//   Unit/Poly:   q^{-1} G(a,q) sum_x h(x) e(theta psi(x))
//   Prime kinds: phi(W)/phi(Wq) * G_restricted * sum_x h(x) e(theta psi(x))
// With use_delta_identity (DeltaPrime only) the inner sum is replaced by the
// telescoped sum_{x=1}^{psi(N)} e(theta x) evaluated in closed form.
cd major_arc_approx(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w,
                    bool use_delta_identity = false, i64 q_cutoff = INT64_MAX);

struct WeylBoundValue {
    double envelope = 0.0;     // V (V^{-1/K} + a1^{1/2K} log^{(k-1)^2/2K} (...)^{1/2K}), K = 2^{k-1}
    double coarse = 0.0;       // V^{1+eps} (a1/q + a1/V + q/V^k)^{2^{1-k}}
};

// Reference upper-bound formulas with implied constant 1; eps enters only the
// coarse form.
WeylBoundValue weyl_bound(const IntPolynomial& psi, i64 a, i64 q, i64 V, double eps = 0.05);

}  // namespace weylab
