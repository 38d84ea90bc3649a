#include "weylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weylab/blocked.hpp"
#include "weylab/fft.hpp"

namespace weylab {

Signal::Signal(i64 n, std::vector<cd> v) : N(n), values(std::move(v)) {
    if (N < 1 || values.size() != size_t(N)) throw std::domain_error("signal length mismatch");
}

cd Signal::sum() const {
    long double re = 0, im = 0;
    for (const cd& v : values) {
        re += v.real();
        im += v.imag();
    }
    return cd(double(re), double(im));
}

Signal dft(const Signal& f) { return Signal(f.N, dft_any(f.values, false)); }

Signal idft(const Signal& f) { return Signal(f.N, dft_any(f.values, true)); }

Signal convolve(const Signal& f, const Signal& g) {
    if (f.N != g.N) throw std::domain_error("convolve requires equal lengths");
    std::vector<cd> fh = dft_any(f.values, false), gh = dft_any(g.values, false);
    for (size_t i = 0; i < fh.size(); ++i) fh[i] *= gh[i];
    return Signal(f.N, dft_any(fh, true));
}

std::vector<i64> large_spectrum(const Signal& a, double eta) {
    if (eta <= 0) throw std::domain_error("large_spectrum requires eta > 0");
    Signal ah = dft(a);
    std::vector<i64> R;
    for (i64 r = 0; r < a.N; ++r)
        if (std::abs(ah.values[size_t(r)]) >= eta) R.push_back(r);
    return R;
}

std::vector<i64> bohr_set(const std::vector<i64>& R, double eps, i64 N) {
    if (!(eps > 0 && eps < 0.5)) throw std::domain_error("bohr_set requires 0 < eps < 1/2");
    std::vector<char> in(size_t(N), 1);
#pragma omp parallel for schedule(static)
    for (i64 x = 0; x < N; ++x) {
        for (i64 r : R) {
            i64 d = i64((i128(x) * r) % N);
            i64 dist = std::min(d, N - d);
            if (double(dist) > eps * double(N)) {
                in[size_t(x)] = 0;
                break;
            }
        }
    }
    std::vector<i64> B;
    for (i64 x = 0; x < N; ++x)
        if (in[size_t(x)]) B.push_back(x);
    return B;
}

Signal smooth(const Signal& a, const std::vector<i64>& B) {
    if (B.empty()) throw std::domain_error("smooth requires a nonempty set");
    i64 N = a.N;
    for (i64 x : B)
        if (x < 0 || x >= N) throw std::domain_error("smooth: set element outside Z_N");

    // kernel c = 1_B * 1_B as exact integers; FFT result rounds exactly
    // because the true values are integers <= |B| << 2^52
    std::vector<i64> c(size_t(N), 0);
    if (i128(B.size()) * i128(B.size()) <= 4 * i128(N)) {
        for (i64 x : B)
            for (i64 y : B) ++c[size_t((x + y) % N)];
    } else {
        std::vector<cd> ind(size_t(N), cd(0, 0));
        for (i64 x : B) ind[size_t(x)] = cd(1, 0);
        std::vector<cd> ih = dft_any(ind, false);
        for (auto& v : ih) v *= v;
        std::vector<cd> conv = dft_any(ih, true);
        for (i64 x = 0; x < N; ++x) c[size_t(x)] = i64(std::llround(conv[size_t(x)].real()));
    }

    std::vector<std::pair<i64, i64>> support;  // (shift, multiplicity)
    for (i64 s = 0; s < N; ++s)
        if (c[size_t(s)] > 0) support.emplace_back(s, c[size_t(s)]);

    // doubled copy removes the inner modulo; long double accumulators keep
    // the mass drift at rounding level
    std::vector<cd> aa(size_t(2 * N));
    for (i64 i = 0; i < N; ++i) aa[size_t(i)] = aa[size_t(i + N)] = a.values[size_t(i)];

    double inv = 1.0 / (double(B.size()) * double(B.size()));
    Signal out(N);
#pragma omp parallel for schedule(static)
    for (i64 x = 0; x < N; ++x) {
        long double re = 0, im = 0;
        for (const auto& [s, mult] : support) {
            const cd& v = aa[size_t(x - s + N)];
            re += (long double)(mult)*v.real();
            im += (long double)(mult)*v.imag();
        }
        out.values[size_t(x)] = cd(double(re * inv), double(im * inv));
    }
    return out;
}

LinftyReport linfty_check(const Signal& ap) {
    LinftyReport rep;
    rep.threshold = 2.0 / double(ap.N);
    for (const cd& v : ap.values) rep.max_abs = std::max(rep.max_abs, std::abs(v));
    rep.pass = rep.max_abs <= rep.threshold;
    return rep;
}

double restriction_constant(const Signal& a, double rho) {
    if (!(rho > 2.0)) throw std::domain_error("restriction_constant requires rho > 2");
    Signal ah = dft(a);
    return blocked_sum<double>(0, a.N, [&](i64 r) { return std::pow(std::abs(ah.values[size_t(r)]), rho); });
}

WTrickResult w_trick(const std::vector<i64>& P, i64 n, const IntPolynomial& psi,
                     double delta_target, const PrimeTable& T, i64 forced_W) {
    if (n < 2) throw std::domain_error("w_trick requires n >= 2");
    if (T.limit() < 4 * n) throw std::range_error("w_trick requires sieve limit >= 4n");
    WTrickResult res;
    res.t = psi.lowtrim();

    if (forced_W > 0) {
        res.W = forced_W;
    } else {
        // largest primorial W with W^t <= n^{1/4}, i.e. W^{4t} <= n
        i64 W = 1;
        for (i64 p = 2; p <= n; p = [&] {
                 i64 q = p + 1;
                 while (!T.is_prime(q)) ++q;
                 return q;
             }()) {
            i128 pw = 1;
            bool ok = true;
            for (i64 i = 0; i < 4 * res.t && ok; ++i) {
                pw *= i128(W) * p;
                if (pw > n) ok = false;
            }
            if (!ok) break;
            W *= p;
        }
        res.W = W;
    }
    i128 D128 = 1;
    for (i64 i = 0; i < res.t; ++i) D128 = checked_mul(D128, res.W);
    res.D = narrow_i64(D128, "W^t exceeds 64-bit");
    if (res.D > n) throw std::domain_error("w_trick: modulus W^t exceeds n");

    // log-weighted count per admissible residue class
    std::vector<double> weight(size_t(res.D), 0.0);
    for (i64 x : P) {
        if (x < 1 || x > n) throw std::domain_error("w_trick requires P within [1, n]");
        weight[size_t(x % res.D)] += std::log(double(x));
    }
    res.b = 0;
    for (i64 b = 1; b <= res.D; ++b) {
        if (gcd_i64(b, res.D) != 1) continue;
        double wb = weight[size_t(b % res.D)];
        if (res.b == 0 || wb > res.class_weight) {
            res.b = b;
            res.class_weight = wb;
        }
    }
    if (res.b == 0) throw std::domain_error("w_trick: no residue coprime to the modulus");
    res.class_threshold = delta_target * double(n) / (2.0 * double(euler_phi(res.D)));

    for (i64 x : P)
        if (x % res.D == res.b % res.D && (x - res.b) / res.D >= 1) res.A.push_back((x - res.b) / res.D);
    std::sort(res.A.begin(), res.A.end());
    if (res.A.empty()) throw std::domain_error("w_trick: empty admissible residue class");

    // smallest prime in (2n/D, 4n/D]
    i64 lo = 2 * n / res.D, hi = 4 * n / res.D;
    res.N = 0;
    for (i64 m = lo + 1; m <= hi; ++m)
        if (T.is_prime(m)) {
            res.N = m;
            break;
        }
    if (res.N == 0) throw std::domain_error("w_trick: no prime in (2n/D, 4n/D]");

    res.a = Signal(res.N);
    double phi_ratio = double(euler_phi(res.D)) / double(res.D);
    long double mass = 0;
    for (i64 z : res.A) {
        i64 arg = narrow_i64(checked_add(checked_mul(i128(res.D), z), res.b), "lambda argument");
        double lam = T.is_prime(arg) ? phi_ratio * std::log(double(arg)) : 0.0;
        res.a.values[size_t(z)] = cd(lam / double(res.N), 0);
        mass += lam / (long double)(res.N);
    }
    res.mass = double(mass);
    res.threshold = delta_target / 8.0;
    res.mass_ok = res.mass >= res.threshold;
    return res;
}

}  // namespace weylab
