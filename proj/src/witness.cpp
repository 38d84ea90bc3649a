#include "weylab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weylab/blocked.hpp"
#include "weylab/fft.hpp"

namespace weylab {

const char* count_method_name(CountMethod m) {
    switch (m) {
        case CountMethod::BruteForce: return "brute";
        case CountMethod::FFT: return "fft";
        case CountMethod::FourierZN: return "fourier-zn";
    }
    return "?";
}

namespace {

std::vector<char> membership(const std::vector<i64>& A, i64 n) {
    std::vector<char> in(size_t(n + 1), 0);
    for (i64 x : A) {
        if (x < 1 || x > n) throw std::domain_error("set element outside [1, n]");
        in[size_t(x)] = 1;
    }
    return in;
}

// z <= M with W z + 1 prime, paired with the difference psi(z)
std::vector<std::pair<i64, i64>> admissible_z(const IntPolynomial& psi, i64 W, i64 M,
                                              const PrimeTable& T) {
    std::vector<std::pair<i64, i64>> zs;
    for (i64 z = 1; z <= M; ++z) {
        i64 arg = narrow_i64(checked_add(checked_mul(i128(W), z), 1), "W z + 1");
        if (arg > T.limit()) throw std::range_error("witness counting needs sieve limit >= W M + 1");
        if (T.is_prime(arg)) zs.emplace_back(z, narrow_i64(psi.eval(z), "psi(z)"));
    }
    return zs;
}

void gather_samples(WitnessReport& rep, const std::vector<std::pair<i64, i64>>& zs,
                    const std::vector<char>& in, i64 n, i64 cap) {
    for (const auto& [z, d] : zs) {
        for (i64 y = 1; y + d <= n && i64(rep.samples.size()) < cap; ++y)
            if (in[size_t(y)] && in[size_t(y + d)]) rep.samples.push_back({y + d, y, z});
        if (i64(rep.samples.size()) >= cap) break;
    }
}

}  // namespace

WitnessReport count_witnesses(const std::vector<i64>& A, const IntPolynomial& psi, i64 W,
                              const PrimeTable& T, CountMethod method, i64 sample_cap) {
    if (W < 1) throw std::domain_error("count_witnesses requires W >= 1");
    WitnessReport rep;
    rep.method = method;
    rep.W = W;
    rep.psi_text = psi.text();
    if (A.empty()) return rep;
    i64 n = *std::max_element(A.begin(), A.end());
    rep.n = n;
    std::vector<char> in = membership(A, n);
    i64 M = inverse_max(psi, n - 1);
    auto zs = admissible_z(psi, W, M, T);

    if (method == CountMethod::BruteForce) {
        std::vector<i64> per_z(zs.size(), 0);
#pragma omp parallel for schedule(static)
        for (i64 i = 0; i < i64(zs.size()); ++i) {
            i64 d = zs[size_t(i)].second, c = 0;
            for (i64 y = 1; y + d <= n; ++y) c += in[size_t(y)] & in[size_t(y + d)];
            per_z[size_t(i)] = c;
        }
        for (i64 c : per_z) rep.count += c;
    } else {
        // autocorrelation of 1_A on a ring of size >= 2n: no difference wraps
        i64 R = next_pow2(2 * n);
        std::vector<cd> f(size_t(R), cd(0, 0));
        for (i64 x : A) f[size_t(x)] = cd(1, 0);
        fft_pow2(f, false);
        for (auto& v : f) v = cd(std::norm(v), 0.0);
        fft_pow2(f, true);
        for (const auto& [z, d] : zs) rep.count += i64(std::llround(f[size_t(d)].real()));
    }
    gather_samples(rep, zs, in, n, sample_cap);
    return rep;
}

WeightedCount weighted_count(const std::vector<i64>& A, const IntPolynomial& psi, i64 W, i64 N,
                             const PrimeTable& T) {
    if (W < 1 || N < 3) throw std::domain_error("weighted_count requires W >= 1, N >= 3");
    bool prime = N <= T.limit() ? T.is_prime(N) : [&] {
        for (i64 d = 2; d * d <= N; ++d)
            if (N % d == 0) return false;
        return true;
    }();
    if (!prime) throw std::domain_error("weighted_count requires N prime");
    i64 half = (N - 1) / 2;
    for (i64 x : A)
        if (x < 1 || x > half)
            throw std::domain_error("weighted_count requires A within [1, (N-1)/2]");

    WeightedCount out;
    out.M = inverse_max(psi, N / 2 - 1);
    GenPolynomial dpsi = delta(psi);
    std::vector<std::pair<i64, double>> zw;  // (psi(z), weight) for admissible z
    for (i64 z = 1; z <= out.M; ++z) {
        double w = lambda_weight(T, 1, W, z);
        if (w == 0.0) continue;
        w *= double(narrow_i64(dpsi.eval(z - 1), "psi delta"));
        if (w == 0.0) continue;
        zw.emplace_back(narrow_i64(psi.eval(z), "psi(z)"), w);
    }

    std::vector<char> in = membership(A, half);
    long double direct = 0;
    for (const auto& [d, w] : zw) {
        i64 pairs = 0;
        for (i64 y = 1; y + d <= half; ++y) pairs += in[size_t(y)] & in[size_t(y + d)];
        direct += (long double)(w)*pairs;
    }
    out.direct = double(direct);

    std::vector<cd> f(size_t(N), cd(0, 0));
    for (i64 x : A) f[size_t(x)] = cd(1, 0);
    std::vector<cd> fh = dft_any(f, false);
    std::vector<cd> g(size_t(N), cd(0, 0));
    for (const auto& [d, w] : zw) g[size_t(d % N)] += cd(w, 0);
    std::vector<cd> K = dft_any(g, false);
    out.fourier = blocked_sum<double>(0, N, [&](i64 r) {
                      return std::norm(fh[size_t(r)]) * K[size_t(r)].real();
                  }) /
                  double(N);
    return out;
}

DenseCaseReport dense_case_count(i64 n, const std::vector<i64>& A, const IntPolynomial& psi, i64 W,
                                 const PrimeTable& T) {
    if (n < 4) throw std::domain_error("dense_case_count requires n >= 4");
    i64 need = (3 * n + 3) / 4;
    if (i64(A.size()) < need) throw std::domain_error("dense_case_count requires |A| >= ceil(3n/4)");
    std::vector<char> in = membership(A, n);

    DenseCaseReport rep;
    rep.report = count_witnesses(A, psi, W, T, CountMethod::BruteForce);
    rep.report.n = n;

    i64 floor_bound = n / 6 - 2;
    rep.per_z_ok = true;
    rep.worst_pairs = n;
    i64 M3 = inverse_max(psi, n / 3);
    for (const auto& [z, d] : admissible_z(psi, W, M3, T)) {
        i64 pairs = 0;
        for (i64 y = 1; y + d <= n; ++y) pairs += in[size_t(y)] & in[size_t(y + d)];
        rep.worst_pairs = std::min(rep.worst_pairs, pairs);
        if (pairs < floor_bound) rep.per_z_ok = false;
    }

    double k = double(psi.degree());
    double a1 = double(std::abs(psi.leading()));
    rep.bound_value = double(W) * std::pow(double(n), 1.0 + 1.0 / k) * std::pow(a1, -1.0 / k) /
                      (24.0 * k * double(euler_phi(W)) * std::log(double(n)));
    rep.bound_pass = double(rep.report.count) >= rep.bound_value;
    return rep;
}

ProofSchedule epsilon_Q(double delta, i64 k, i64 t, i64 a_low, double C1, double C2) {
    (void)t;  // a_low already is the coefficient the trim selects
    if (!(delta > 0 && delta <= 1)) throw std::domain_error("epsilon_Q requires 0 < delta <= 1");
    if (k < 1 || k > 60 || a_low == 0 || !(C1 > 0) || !(C2 > 0))
        throw std::domain_error("epsilon_Q parameter out of range");
    ProofSchedule s;
    s.rho = double(k) * std::pow(2.0, double(k + 3));
    double ln4 = std::log(4.0), lnd = std::log(delta);
    double lna = std::log(double(std::abs(a_low)));
    double kk2 = double(k) * double(k + 2);
    double ln_eps = -double(k + 2) * s.rho * ln4 + 0.5 * (s.rho + 1.0) * lnd -
                    0.5 * std::log(C2) - 0.5 * lna;
    double ln_Q = std::pow(double(k + 1), 4.0) * ln4 - 2.0 * kk2 * lnd + kk2 * std::log(C1) +
                  kk2 * lna;
    double cap = 300.0 * std::log(10.0);
    if (ln_eps < -cap) {
        s.eps = 1e-300;
        s.capped = true;
    } else {
        s.eps = std::exp(ln_eps);
    }
    if (ln_Q > cap) {
        s.Q = 1e300;
        s.capped = true;
    } else {
        s.Q = std::exp(ln_Q);
    }
    s.impractical = s.eps < 1e-12 || s.Q > 1e12;
    return s;
}

IncrementResult increment_step(const std::vector<i64>& A, i64 n, const IntPolynomial& psi, i64 W,
                               double delta, double eps, i64 Q, i64 m_override) {
    (void)W;
    if (n < 1 || Q < 1 || !(eps > 0)) throw std::domain_error("increment_step parameter out of range");
    i64 t = psi.lowtrim();
    i64 m = m_override;
    if (m <= 0) {
        double qt = std::pow(double(Q), double(t));
        m = i64(std::floor(1e-2 * eps * double(n) / qt));
        if (m < 1) {
            i64 needed = i64(std::ceil(100.0 * qt / eps));
            throw std::domain_error("increment_step degenerate: m = 0, needs n >= " +
                                    std::to_string(needed));
        }
    }
    std::vector<char> in = membership(A, n);

    struct Best {
        i64 cnt = -1, b = 0;
        double qualifying = 0;
    };
    std::vector<Best> per_q(size_t(Q + 1));
#pragma omp parallel for schedule(dynamic)
    for (i64 q = 1; q <= Q; ++q) {
        i128 d128 = 1;
        for (i64 i = 0; i < t; ++i) d128 *= q;
        if (d128 > n) continue;
        i64 d = i64(d128);
        if (i128(m) * d > n) continue;
        i64 bmax = n - m * d;
        Best best;
        i64 qualifying = 0;
        for (i64 r = 0; r < d; ++r) {
            i64 base = r == 0 ? d : r;
            if (base > n) continue;
            i64 L = (n - base) / d + 1;
            std::vector<i64> pre(size_t(L + 1), 0);
            for (i64 i = 0; i < L; ++i) pre[size_t(i + 1)] = pre[size_t(i)] + in[size_t(base + i * d)];
            for (i64 i = 0; i + m <= L; ++i) {
                i64 b = base + i * d;
                if (b > bmax) break;
                i64 cnt = pre[size_t(i + m)] - pre[size_t(i)];
                if (double(cnt) >= (delta + eps) * double(m)) {
                    ++qualifying;
                    if (cnt > best.cnt || (cnt == best.cnt && b < best.b)) best = {cnt, b, 0};
                }
            }
        }
        best.qualifying = double(qualifying);
        per_q[size_t(q)] = best;
    }

    IncrementResult res;
    res.m = m;
    res.delta_before = delta;
    i64 best_cnt = -1;
    for (i64 q = 1; q <= Q; ++q) {
        const Best& bq = per_q[size_t(q)];
        if (bq.cnt < 0 || bq.qualifying < eps * double(n)) continue;
        // density first; the ascending scan settles ties toward smaller q
        if (bq.cnt > best_cnt) {
            best_cnt = bq.cnt;
            res.found = true;
            res.q = q;
            res.b = bq.b;
            res.delta_after = double(bq.cnt) / double(m);
        }
    }
    if (res.found) {
        i128 d128 = 1;
        for (i64 i = 0; i < t; ++i) d128 *= res.q;
        i64 d = i64(d128);
        for (i64 j = 0; j < m; ++j)
            if (in[size_t(res.b + j * d)]) res.A_sub.push_back(1 + j);
    }
    return res;
}

namespace {

struct LevelMap {
    i64 q = 1, b = 0, d = 1;  // x -> b + (x-1) d, z -> z q
};

}  // namespace

IncrementTrace find_witnesses(const std::vector<i64>& A, i64 n, const IntPolynomial& psi, i64 W,
                              const PrimeTable& T, const FindSchedule& sched) {
    if (n < 1 || W < 1) throw std::domain_error("find_witnesses parameter out of range");
    (void)membership(A, n);  // validates the range

    IncrementTrace tr;
    std::vector<LevelMap> maps;
    std::vector<i64> A_cur = A;
    std::sort(A_cur.begin(), A_cur.end());
    i64 n_cur = n, W_cur = W;
    IntPolynomial psi_cur = psi;
    i64 t = psi.lowtrim();

    while (true) {
        double delta = double(A_cur.size()) / double(n_cur);
        if (A_cur.empty() || delta >= sched.dense_delta) break;
        if (i64(maps.size()) >= sched.depth_cap) {
            tr.exhausted = "depth";
            break;
        }
        double eps = sched.eps_factor * delta;
        i64 Q = std::min(sched.Q_cap, i64(std::ceil(1.0 / delta)));
        auto m_of = [&](i64 q) {
            double qt = std::pow(double(q), double(t));
            return i64(std::floor(double(n_cur) / (double(sched.m_denom) * qt)));
        };
        while (Q > 1 && m_of(Q) < sched.m_min) --Q;
        i64 m = m_of(Q);
        if (m < sched.m_min) break;  // subproblem too small; count here

        IncrementResult res = increment_step(A_cur, n_cur, psi_cur, W_cur, delta, eps, Q, m);
        if (!res.found) break;

        IntPolynomial psi_next = psi_cur;
        i64 W_next = W_cur;
        try {
            psi_next = rescale(psi_cur, res.q);
            W_next = narrow_i64(checked_mul(i128(W_cur), res.q), "W overflow");
        } catch (const std::range_error&) {
            tr.exhausted = "overflow";
            break;
        }
        tr.steps.push_back({res.q, res.b, res.m, res.delta_before, res.delta_after});
        i128 d = 1;
        for (i64 i = 0; i < t; ++i) d *= res.q;
        maps.push_back({res.q, res.b, i64(d)});
        A_cur = std::move(res.A_sub);
        n_cur = res.m;
        psi_cur = psi_next;
        W_cur = W_next;
    }

    try {
        tr.terminal =
            count_witnesses(A_cur, psi_cur, W_cur, T, CountMethod::BruteForce, sched.sample_cap);
    } catch (const std::range_error&) {
        tr.exhausted = tr.exhausted.empty() ? "range" : tr.exhausted;
        tr.terminal = WitnessReport{};
    }

    // unwind samples to original coordinates
    for (Triple& s : tr.terminal.samples) {
        for (i64 i = i64(maps.size()) - 1; i >= 0; --i) {
            s.x = maps[size_t(i)].b + (s.x - 1) * maps[size_t(i)].d;
            s.y = maps[size_t(i)].b + (s.y - 1) * maps[size_t(i)].d;
            s.z = s.z * maps[size_t(i)].q;
        }
    }

    if (tr.terminal.count == 0 && !A.empty()) {
        tr.used_fallback = true;
        tr.terminal = count_witnesses(A, psi, W, T, CountMethod::BruteForce, sched.sample_cap);
    }

    // exact re-verification against the original instance
    std::vector<i64> sorted = A;
    std::sort(sorted.begin(), sorted.end());
    auto in_A = [&](i64 v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
    for (const Triple& s : tr.terminal.samples) {
        bool ok = in_A(s.x) && in_A(s.y) && s.z >= 1 && psi.eval(s.z) == i128(s.x) - i128(s.y);
        i64 arg = narrow_i64(checked_add(checked_mul(i128(W), s.z), 1), "W z + 1");
        ok = ok && (arg <= T.limit() ? T.is_prime(arg) : false);
        if (!ok) throw std::logic_error("witness unwinding produced an invalid triple");
        ++tr.verified_samples;
    }
    return tr;
}

}  // namespace weylab
