#pragma once
#include <complex>
#include <vector>

#include "weylab/expsum.hpp"
#include "weylab/polycore.hpp"
#include "weylab/primetools.hpp"

// Plain serial implementations kept as oracles for the parallel kernels and
// as the baseline side of the benchmark. No blocking, no OpenMP, no FFT.
namespace weylab::reference {

using cd = std::complex<double>;

// O(N^2) transform, same kernel convention as dft_any.
std::vector<cd> naive_dft(const std::vector<cd>& a, bool inverse);

// O(N^2) cyclic convolution by the defining double loop.
std::vector<cd> naive_convolve(const std::vector<cd>& f, const std::vector<cd>& g);

// Serial left-to-right Weyl sum; the phase alpha * psi(x) is reduced mod 1 in
// long double instead of the split-phase route.
cd weyl_sum_serial(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w,
                   const PrimeTable* T = nullptr);

// One flat bool-vector Eratosthenes pass.
std::vector<char> simple_sieve(i64 limit);

}  // namespace weylab::reference
