// Benchmark: the parallel kernels against their serial reference
// implementations, with agreement checks.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "weylab/expsum.hpp"
#include "weylab/fft.hpp"
#include "weylab/parse.hpp"
#include "weylab/primetools.hpp"
#include "weylab/reference.hpp"
#include "weylab/witness.hpp"

using namespace weylab;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double fast_ms, double diff) {
    std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   max|diff| %.3g\n", name, serial_ms, fast_ms,
                serial_ms / fast_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        i64 N = quick ? 100'000 : 2'000'000;
        IntPolynomial psi({1, 0});
        Phase alpha = Phase::from_real(0.6180339887498949, 1'000'000);
        auto t0 = std::chrono::steady_clock::now();
        cd slow = reference::weyl_sum_serial(psi, alpha, N, Weight::unit());
        double t_slow = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        cd fast = weyl_sum(psi, alpha, N, Weight::unit());
        row("weyl sum (unit, x^2)", t_slow, ms_since(t0), std::abs(slow - fast));
    }

    {
        i64 N = quick ? 1024 : 4096;
        std::vector<cd> a(static_cast<size_t>(N));
        std::mt19937_64 rng(7);
        for (auto& v : a) v = cd(double(rng() >> 11) * 0x1.0p-53 - 0.5, double(rng() >> 11) * 0x1.0p-53 - 0.5);
        auto t0 = std::chrono::steady_clock::now();
        std::vector<cd> slow = reference::naive_dft(a, false);
        double t_slow = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        std::vector<cd> fast = dft_any(a, false);
        double t_fast = ms_since(t0);
        double diff = 0;
        for (size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(slow[i] - fast[i]));
        row("transform (pow2)", t_slow, t_fast, diff);
    }

    {
        i64 limit = quick ? 2'000'000 : 20'000'000;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<char> simple = reference::simple_sieve(limit);
        i64 c_slow = 0;
        for (char c : simple) c_slow += c;
        double t_slow = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        PrimeTable T = PrimeTable::build(limit);
        i64 c_fast = T.count_primes();
        row("prime sieve", t_slow, ms_since(t0), double(std::abs(c_slow - c_fast)));
    }

    {
        i64 n = quick ? 20'000 : 200'000;
        std::vector<i64> A = uniform_set(n, 0.5, 11);
        IntPolynomial psi({1, 0});
        PrimeTable T = PrimeTable::build(n + 1);
        auto t0 = std::chrono::steady_clock::now();
        WitnessReport brute = count_witnesses(A, psi, 1, T, CountMethod::BruteForce, 0);
        double t_slow = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        WitnessReport fft = count_witnesses(A, psi, 1, T, CountMethod::FFT, 0);
        row("witness count (fft vs z-loop)", t_slow, ms_since(t0),
            double(i64(brute.count - fft.count)));
    }

    return 0;
}
