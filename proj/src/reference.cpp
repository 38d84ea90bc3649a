#include "weylab/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace weylab::reference {

std::vector<cd> naive_dft(const std::vector<cd>& a, bool inverse) {
    i64 n = i64(a.size());
    std::vector<cd> out(a.size());
    double sign = inverse ? 1.0 : -1.0;
    for (i64 r = 0; r < n; ++r) {
        cd acc(0, 0);
        for (i64 x = 0; x < n; ++x) {
            double ang = sign * 2.0 * M_PI * double((i128(x) * r) % n) / double(n);
            acc += a[size_t(x)] * cd(std::cos(ang), std::sin(ang));
        }
        out[size_t(r)] = inverse ? acc / double(n) : acc;
    }
    return out;
}

std::vector<cd> naive_convolve(const std::vector<cd>& f, const std::vector<cd>& g) {
    if (f.size() != g.size()) throw std::domain_error("naive_convolve requires equal lengths");
    i64 n = i64(f.size());
    std::vector<cd> out(f.size(), cd(0, 0));
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) out[size_t(x)] += f[size_t(y)] * g[size_t(((x - y) % n + n) % n)];
    return out;
}

cd weyl_sum_serial(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w,
                   const PrimeTable* T) {
    std::vector<double> wt = weight_values(psi, w, N, T);
    long double av = (long double)(alpha.a) / (long double)(alpha.q) + (long double)(alpha.theta);
    long double re = 0, im = 0;
    for (i64 x = 1; x <= N; ++x) {
        if (wt[size_t(x)] == 0.0) continue;
        long double t = av * (long double)(psi.eval(x));
        t -= std::floor(t);
        re += wt[size_t(x)] * std::cos(2.0L * M_PIl * t);
        im += wt[size_t(x)] * std::sin(2.0L * M_PIl * t);
    }
    return cd(double(re), double(im));
}

std::vector<char> simple_sieve(i64 limit) {
    std::vector<char> is(size_t(limit + 1), 1);
    is[0] = 0;
    if (limit >= 1) is[1] = 0;
    for (i64 p = 2; p * p <= limit; ++p)
        if (is[size_t(p)])
            for (i64 m = p * p; m <= limit; m += p) is[size_t(m)] = 0;
    return is;
}

}  // namespace weylab::reference
