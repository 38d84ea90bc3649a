#pragma once
#include <string>
#include <vector>

#include "weylab/polycore.hpp"
#include "weylab/primetools.hpp"

namespace weylab {

enum class CountMethod { BruteForce, FFT, FourierZN };
const char* count_method_name(CountMethod m);

struct Triple {
    i64 x = 0, y = 0, z = 0;
};

// Outcome of counting solutions of x - y = psi(z) with x, y in A and
// W z + 1 prime.
struct WitnessReport {
    i128 count = 0;
    double weighted = 0.0;  // only for the weighted counter
    std::vector<Triple> samples;
    CountMethod method = CountMethod::BruteForce;
    i64 n = 0, W = 1;
    std::string psi_text;
};

// Exact solution count. BruteForce sweeps (z, y); FFT takes the difference
// autocorrelation of 1_A on a power-of-two ring of size >= 2n (no cyclic
// aliasing) and sums it over the admissible differences psi(z).
WitnessReport count_witnesses(const std::vector<i64>& A, const IntPolynomial& psi, i64 W,
                              const PrimeTable& T, CountMethod method, i64 sample_cap = 16);

struct WeightedCount {
    double direct = 0.0;   // double loop over (z, y)
    double fourier = 0.0;  // (1/N) sum_r hat1_A(r) hat1_A(-r) K(r) on Z_N
    i64 M = 0;             // z cap: largest z with psi(z) <= floor(N/2) - 1
};

// Weighted witness count with weight psiDelta(z-1) lambda_{1,W}(z), by both
// routes; A must fit in [1, (N-1)/2] so integer differences and Z_N
// differences coincide.
WeightedCount weighted_count(const std::vector<i64>& A, const IntPolynomial& psi, i64 W, i64 N,
                             const PrimeTable& T);

struct DenseCaseReport {
    WitnessReport report;
    double bound_value = 0.0;  // (1/24k) W n^{1+1/k} a1^{-1/k} / (phi(W) log n)
    bool bound_pass = false;
    bool per_z_ok = false;  // every admissible z with psi(z) <= n/3 gives >= floor(n/6) - 2 pairs
    i64 worst_pairs = 0;
};

// The density >= 3/4 shortcut: count plus the per-difference pair bound.
DenseCaseReport dense_case_count(i64 n, const std::vector<i64>& A, const IntPolynomial& psi, i64 W,
                                 const PrimeTable& T);

struct ProofSchedule {
    double eps = 0.0;
    double Q = 0.0;
    double rho = 0.0;
    bool impractical = false;  // eps < 1e-12 or Q > 1e12
    bool capped = false;       // magnitude beyond 1e300, value clamped
};

// The theoretical increment parameters:
//   rho = k 2^{k+3}
//   eps = 4^{-(k+2) rho} delta^{(rho+1)/2} C2^{-1/2} |a_low|^{-1/2}
//   Q   = 4^{(k+1)^4} delta^{-2k(k+2)} C1^{k(k+2)} |a_low|^{k(k+2)}
// evaluated in the log domain and clamped at 1e300 / 1e-300.
ProofSchedule epsilon_Q(double delta, i64 k, i64 t, i64 a_low, double C1 = 1.0, double C2 = 1.0);

struct IncrementResult {
    bool found = false;  // false: no dense subprogression at this (eps, Q)
    i64 q = 0, b = 0, m = 0;
    std::vector<i64> A_sub;  // mapped to [1, m] via x -> 1 + (x - b) / q^t
    double delta_before = 0.0, delta_after = 0.0;
};

// One density-increment scan: q = 1..Q, progressions {b, b+q^t, ...} of
// length m; an increment needs some q with >= eps*n starting points b whose
// progression holds >= (delta+eps)m elements of A. Among qualifying (q, b):
// maximal density, then smallest q, then smallest b. m defaults to
// floor(10^{-2} eps Q^{-t} n); m_override > 0 replaces it.
IncrementResult increment_step(const std::vector<i64>& A, i64 n, const IntPolynomial& psi, i64 W,
                               double delta, double eps, i64 Q, i64 m_override = 0);

struct IncrementStep {
    i64 q = 0, b = 0, m = 0;
    double delta_before = 0.0, delta_after = 0.0;
};

struct FindSchedule {
    double eps_factor = 0.1;     // eps = eps_factor * delta
    i64 Q_cap = 20;              // Q = min(Q_cap, ceil(1/delta)), lowered until m >= m_min
    i64 m_denom = 4;             // m = floor(n / (m_denom Q^t))
    i64 m_min = 8;               // smallest workable subproblem
    double dense_delta = 0.75;   // count directly at this density
    i64 depth_cap = 32;
    i64 sample_cap = 16;
};

struct IncrementTrace {
    std::vector<IncrementStep> steps;
    WitnessReport terminal;          // counted at the deepest level, samples unwound
    std::string exhausted;           // nonempty: "depth" / "overflow" reason
    bool used_fallback = false;      // deep count was 0; reported count is on the original set
    i64 verified_samples = 0;        // triples re-checked against the original instance
};

// Density-increment driver: descend while increments exist, then count; every
// emitted triple is unwound through x -> b + (x-1) q^t, z -> z q per level
// and re-verified exactly against the original (A, psi, W).
IncrementTrace find_witnesses(const std::vector<i64>& A, i64 n, const IntPolynomial& psi, i64 W,
                              const PrimeTable& T, const FindSchedule& sched = {});

}  // namespace weylab
