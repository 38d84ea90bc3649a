#include "weylab/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "weylab/blocked.hpp"
#include "weylab/fft.hpp"

namespace weylab {

RationalApprox dirichlet_approx(double alpha, i64 Q) {
    if (Q < 1) throw std::domain_error("dirichlet_approx requires Q >= 1");
    double f = alpha - std::floor(alpha);
    // convergents h/k of f via the standard recurrence
    i64 h1 = 1, h2 = 0;  // p_{n-1}, p_{n-2}: current = a * prev + prevprev
    i64 k1 = 0, k2 = 1;
    RationalApprox best{0, 1};
    double x = f;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        if (fl > 9e17) break;  // previous convergent is exact to double precision
        i64 a = i64(fl);
        i128 h = i128(a) * h1 + h2;
        i128 k = i128(a) * k1 + k2;
        if (k > Q) break;
        best = {narrow_i64(h, "convergent overflow"), narrow_i64(k, "convergent overflow")};
        h2 = h1;
        h1 = best.a;
        k2 = k1;
        k1 = best.q;
        double rem = x - fl;
        if (rem < 1e-18) break;
        x = 1.0 / rem;
    }
    return best;
}

ArcScheme::ArcScheme(Kind k, i64 cutoff, double width_num, double fixed_width)
    : kind_(k), cutoff_(cutoff), width_num_(width_num), fixed_width_(fixed_width) {
    if (cutoff_ < 1) throw std::domain_error("arc cutoff must be >= 1");
    check_disjoint();
}

ArcScheme ArcScheme::power_nu(double nu, i64 N, const IntPolynomial& psi) {
    if (!(nu > 0.0) || N < 2) throw std::domain_error("power_nu requires nu > 0, N >= 2");
    double P = std::pow(double(N), nu);
    double psiN = double(psi.eval(N));
    return ArcScheme(Kind::PowerNu, i64(std::floor(P)), P / psiN, 0.0);
}

ArcScheme ArcScheme::log_power(double B, i64 N, const IntPolynomial& psi) {
    if (!(B > 0.0) || N < 3) throw std::domain_error("log_power requires B > 0, N >= 3");
    double L = std::pow(std::log(double(N)), 2.0 * B);
    double psiN = double(psi.eval(N));
    if (L < 1.0) L = 1.0;
    return ArcScheme(Kind::LogPower, i64(std::floor(L)), L / psiN, 0.0);
}

ArcScheme ArcScheme::fixed(i64 Q, double halfwidth) {
    if (Q < 1 || !(halfwidth >= 0.0)) throw std::domain_error("fixed scheme requires Q >= 1, halfwidth >= 0");
    return ArcScheme(Kind::Fixed, Q, 0.0, halfwidth);
}

double ArcScheme::halfwidth(i64 q) const {
    if (q < 1) throw std::domain_error("halfwidth requires q >= 1");
    return kind_ == Kind::Fixed ? fixed_width_ : width_num_ / double(q);
}

void ArcScheme::check_disjoint() const {
    constexpr i64 kScanCap = 4000;
    if (cutoff_ > kScanCap) {
        // Farey neighbours with q, q' <= Q satisfy |a/q - a'/q'| = 1/(q q');
        // a uniform width bound below the worst-case gap proves disjointness.
        double max_w = kind_ == Kind::Fixed ? fixed_width_ : width_num_;
        if (max_w > 0.5 / double(cutoff_) / double(cutoff_))
            throw std::domain_error("arc disjointness not verifiable at this cutoff");
        return;
    }
    // exact overlap scan over the Farey fractions of order cutoff
    std::vector<std::pair<double, i64>> arcs;  // (centre, q)
    for (i64 q = 1; q <= cutoff_; ++q)
        for (i64 a = 0; a < q; ++a)
            if (gcd_i64(a, q) == 1) arcs.emplace_back(double(a) / double(q), q);
    std::sort(arcs.begin(), arcs.end());
    for (size_t i = 0; i + 1 < arcs.size(); ++i) {
        double hi = arcs[i].first + halfwidth(arcs[i].second);
        double lo = arcs[i + 1].first - halfwidth(arcs[i + 1].second);
        if (hi > lo) throw std::domain_error("arcs overlap for these parameters");
    }
    // wraparound: last arc against 0/1 shifted by one period
    double hi = arcs.back().first + halfwidth(arcs.back().second);
    double lo = 1.0 - halfwidth(1);
    if (hi > lo) throw std::domain_error("arcs overlap for these parameters");
}

ArcClass classify(const ArcScheme& scheme, double alpha) {
    double f = alpha - std::floor(alpha);
    // collect convergents with denominator <= cutoff, in increasing q
    std::vector<RationalApprox> conv;
    {
        i64 h1 = 1, h2 = 0, k1 = 0, k2 = 1;
        double x = f;
        for (int it = 0; it < 64; ++it) {
            double fl = std::floor(x);
            if (fl > 9e17) break;
            i64 a = i64(fl);
            i128 h = i128(a) * h1 + h2;
            i128 k = i128(a) * k1 + k2;
            if (k > scheme.cutoff()) break;
            RationalApprox r{narrow_i64(h, "convergent overflow"), narrow_i64(k, "convergent overflow")};
            conv.push_back(r);
            h2 = h1;
            h1 = r.a;
            k2 = k1;
            k1 = r.q;
            double rem = x - fl;
            if (rem < 1e-18) break;
            x = 1.0 / rem;
        }
        if (conv.empty()) conv.push_back({0, 1});
    }
    auto canon = [](RationalApprox r) -> ArcClass {
        if (r.a == 0) return {false, r.q, r.q};  // zero residue written a = q
        return {false, r.a, r.q};
    };
    for (const RationalApprox& r : conv) {
        double dist = std::fabs(f - double(r.a) / double(r.q));
        // the 0/1 centre is also the 1/1 centre on the circle
        if (r.a == 0) dist = std::min(dist, std::fabs(1.0 - f));
        if (dist <= scheme.halfwidth(r.q)) {
            ArcClass c = canon(r);
            c.major = true;
            return c;
        }
    }
    // alpha near 1 has convergent 1/1 only when the first partial quotient is
    // 1; the wraparound against 0/1 is covered above. Minor: report the last
    // convergent (the Dirichlet approximant).
    return canon(conv.back());
}

double moment(const IntPolynomial& psi, const Weight& w, i64 N, double rho, i64 grid,
              const PrimeTable* T, bool require_exact_capable) {
    if (N < 1 || grid < 1) throw std::domain_error("moment requires N >= 1, grid >= 1");
    if (grid > (i64(1) << 31)) throw std::range_error("moment grid beyond supported range");
    if (!(rho > 0.0)) throw std::domain_error("moment requires rho > 0");
    if (require_exact_capable) {
        i128 nyquist = checked_mul(i128(2), psi.eval(N));
        if (i128(grid) < nyquist)
            throw std::domain_error("grid below the even-moment threshold 2 psi(N)");
    }
    std::vector<double> wv = weight_values(psi, w, N, T);
    std::vector<std::pair<i64, double>> terms;  // (psi(x) mod grid, weight)
    for (i64 x = 1; x <= N; ++x)
        if (wv[size_t(x)] != 0.0) {
            i128 v = psi.eval(x) % grid;
            if (v < 0) v += grid;
            terms.emplace_back(i64(v), wv[size_t(x)]);
        }
    return blocked_sum<double>(0, grid, [&](i64 j) {
        cd s(0, 0);
        for (auto& [m, wx] : terms) s += wx * e_of(double((m * j) % grid) / double(grid));
        return std::pow(std::abs(s), rho);
    }) / double(grid);
}

double moment_exact_even(const IntPolynomial& psi, const Weight& w, i64 N, i64 L, const PrimeTable* T) {
    if (L < 1 || N < 1) throw std::domain_error("moment_exact_even requires L >= 1, N >= 1");
    double tuples = std::pow(double(N), double(L));
    if (tuples > 2e7) throw resource_error("meet-in-the-middle table too large");
    std::vector<double> wv = weight_values(psi, w, N, T);
    std::vector<i64> vals(size_t(N + 1));
    for (i64 x = 1; x <= N; ++x) vals[size_t(x)] = narrow_i64(psi.eval(x), "psi value exceeds 64-bit");

    std::map<i64, double> sums;  // sum of L values -> total weight product
    std::vector<i64> idx(size_t(L), 1);
    for (;;) {
        i128 s = 0;
        double prod = 1.0;
        for (i64 i = 0; i < L; ++i) {
            s += vals[size_t(idx[size_t(i)])];
            prod *= wv[size_t(idx[size_t(i)])];
        }
        if (prod != 0.0) sums[narrow_i64(s, "tuple sum exceeds 64-bit")] += prod;
        i64 pos = L - 1;
        while (pos >= 0 && idx[size_t(pos)] == N) {
            idx[size_t(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++idx[size_t(pos)];
    }
    double total = 0.0;
    for (auto& [s, c] : sums) total += c * c;
    return total;
}

double discrete_moment(const IntPolynomial& psi, const Weight& w, i64 N, i64 p, double rho,
                       const PrimeTable* T) {
    if (N < 1 || p < 2) throw std::domain_error("discrete_moment requires N >= 1, p >= 2");
    bool prime = (T && p <= T->limit()) ? T->is_prime(p) : [p] {
        if (p % 2 == 0) return p == 2;
        for (i64 d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }();
    if (!prime) throw std::domain_error("discrete_moment requires p prime");
    if (psi.eval(1) < 1) throw std::domain_error("discrete_moment requires psi positive on [1, N]");
    GenPolynomial dlt = delta(psi);
    for (i64 x = 1; x < N; ++x)
        if (dlt.eval(x) <= 0) throw std::domain_error("discrete_moment requires psi increasing on [1, N]");
    if (psi.eval(N) > i128(p)) throw std::domain_error("discrete_moment requires p >= psi(N)");

    std::vector<double> wv = weight_values(psi, w, N, T);
    std::vector<std::pair<i64, double>> terms;
    for (i64 x = 1; x <= N; ++x)
        if (wv[size_t(x)] != 0.0) terms.emplace_back(i64(psi.eval(x) % p), wv[size_t(x)]);

    if (double(p) * double(terms.size()) <= 5e7) {
        return blocked_sum<double>(1, p + 1, [&](i64 r) {
            cd s(0, 0);
            for (auto& [m, wx] : terms) s += wx * e_of(-double((m * r) % p) / double(p));
            return std::pow(std::abs(s), rho);
        }) / double(p);
    }
    std::vector<cd> f(size_t(p), cd(0, 0));
    for (auto& [m, wx] : terms) f[size_t(m)] += wx;
    std::vector<cd> F = dft_any(f, false);
    return blocked_sum<double>(0, p, [&](i64 r) { return std::pow(std::abs(F[size_t(r)]), rho); }) /
           double(p);
}

}  // namespace weylab
