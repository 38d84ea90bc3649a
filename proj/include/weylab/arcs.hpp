#pragma once
#include <vector>

#include "weylab/expsum.hpp"
#include "weylab/polycore.hpp"

namespace weylab {

struct RationalApprox {
    i64 a = 0, q = 1;
};

// Best rational a/q with q <= Q and |alpha - a/q| <= 1/(q(Q+1)), from the
// continued-fraction convergents of alpha. gcd(a, q) = 1.
RationalApprox dirichlet_approx(double alpha, i64 Q);

// Major/minor dissection of the circle. An arc around a/q (q <= cutoff,
// gcd(a,q)=1) has half-width halfwidth(q); boundaries are closed. The
// constructor rejects parameter sets whose arcs overlap.
class ArcScheme {
public:
    enum class Kind { PowerNu, LogPower, Fixed };

    // q <= N^nu, |alpha - a/q| <= N^nu / (q psi(N))
    static ArcScheme power_nu(double nu, i64 N, const IntPolynomial& psi);
    // q <= (log N)^{2B}, |alpha - a/q| <= (log N)^{2B} / (q psi(N))
    static ArcScheme log_power(double B, i64 N, const IntPolynomial& psi);
    // q <= Q, |alpha - a/q| <= halfwidth
    static ArcScheme fixed(i64 Q, double halfwidth);

    Kind kind() const { return kind_; }
    i64 cutoff() const { return cutoff_; }
    double halfwidth(i64 q) const;

private:
    ArcScheme(Kind k, i64 cutoff, double width_num, double fixed_width);
    void check_disjoint() const;

    Kind kind_;
    i64 cutoff_;
    double width_num_;    // numerator of halfwidth(q) = width_num_ / q (PowerNu, LogPower)
    double fixed_width_;  // Fixed
};

struct ArcClass {
    bool major = false;
    i64 a = 1, q = 1;  // approximant; for Major the arc centre, a = q for the zero residue
};

// Scans the convergents of alpha for a containing arc; alpha = 0 mod 1 maps
// to the (1, 1) arc. The returned approximant always satisfies
// |alpha - a/q| <= q^{-2}.
ArcClass classify(const ArcScheme& scheme, double alpha);

// (1/grid) sum over the uniform grid of |S(j/grid)|^rho, S the w-weighted sum
// with frequencies psi(x), x <= N; the periodic trapezoid rule. When
// require_exact_capable is set, grid must reach the even-moment Nyquist
// threshold 2 psi(N) (domain error otherwise).
double moment(const IntPolynomial& psi, const Weight& w, i64 N, double rho, i64 grid,
              const PrimeTable* T = nullptr, bool require_exact_capable = false);

// Exact weighted solution count of psi(x_1)+...+psi(x_L) = psi(x_{L+1})+...+psi(x_{2L}),
// the rho = 2L moment's combinatorial value (meet-in-the-middle).
double moment_exact_even(const IntPolynomial& psi, const Weight& w, i64 N, i64 L,
                         const PrimeTable* T = nullptr);

// (1/p) sum_{r=1}^{p} |sum_z w(z) e(-r psi(z)/p)|^rho over the prime ring Z_p;
// requires p prime and p >= psi(N).
double discrete_moment(const IntPolynomial& psi, const Weight& w, i64 N, i64 p, double rho,
                       const PrimeTable* T = nullptr);

}  // namespace weylab
