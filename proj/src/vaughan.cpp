#include "weylab/vaughan.hpp"

#include <cmath>
#include <stdexcept>

#include "weylab/arcs.hpp"
#include "weylab/blocked.hpp"
#include "weylab/dd.hpp"

namespace weylab {

namespace {

// floor(V^{2/5}) settled in exact integer arithmetic: r^5 <= V^2 < (r+1)^5.
i64 floor_v25(i64 V) {
    i64 r = i64(std::floor(std::pow(double(V), 0.4)));
    auto pow5_leq = [](i64 r5, i128 bound) {
        i128 p = 1;
        for (int i = 0; i < 5; ++i) {
            p = checked_mul(p, r5);
            if (p > bound) return false;
        }
        return p <= bound;
    };
    i128 V2 = i128(V) * V;
    while (r > 1 && !pow5_leq(r, V2)) --r;
    while (pow5_leq(r + 1, V2)) ++r;
    return r;
}

// Lambda(1..upto) by direct prime-power marking.
std::vector<double> mangoldt_table(i64 upto, const PrimeTable& T) {
    std::vector<double> lam(size_t(upto + 1), 0.0);
    if (upto < 2) return lam;
    T.for_each_prime(2, upto, [&](i64 p) {
        double lp = std::log(double(p));
        for (i128 pk = p; pk <= upto; pk = pk * p) lam[size_t(i64(pk))] = lp;
    });
    return lam;
}

}  // namespace

std::vector<i64> tau_table(i64 upto, i64 X, const PrimeTable& T) {
    std::vector<i64> tau(size_t(upto + 1), 0);
    for (i64 d = 1; d <= std::min(X, upto); ++d) {
        int mu = T.mobius(d);
        if (mu == 0) continue;
        for (i64 u = d; u <= upto; u += d) tau[size_t(u)] += mu;
    }
    return tau;
}

VaughanSplit decompose(const std::function<cd(i64)>& F, i64 V, i64 X, const PrimeTable& T) {
    if (V < 1) throw std::domain_error("decompose requires V >= 1");
    if (V > T.limit()) throw std::range_error("decompose requires sieve limit >= V");
    if (X == 0) X = floor_v25(V);
    if (X < 1 || X > V) throw std::domain_error("decompose requires 1 <= X <= V");

    VaughanSplit out;
    out.V = V;
    out.X = X;
    std::vector<double> lam = mangoldt_table(V, T);
    std::vector<int> mu(size_t(X + 1), 0);
    for (i64 d = 1; d <= X; ++d) mu[size_t(d)] = T.mobius(d);

    // S1 and S2 share the (d, z) frame; partials per d keep the parallel
    // reduction order fixed.
    std::vector<cd> s1_part(size_t(X + 1), cd(0, 0)), s2_part(size_t(X + 1), cd(0, 0));
#pragma omp parallel for schedule(dynamic)
    for (i64 d = 1; d <= X; ++d) {
        if (mu[size_t(d)] == 0) continue;
        cd acc1(0, 0), acc2(0, 0);
        for (i64 z = 1; z <= V / d; ++z) {
            i64 u = d * z;
            i64 xmax = V / u;
            cd inner1(0, 0), inner2(0, 0);
            for (i64 x = 1; x <= xmax; ++x) {
                if (lam[size_t(x)] == 0.0) continue;
                cd t = lam[size_t(x)] * F(x * u);
                inner1 += t;
                if (x <= X) inner2 += t;
            }
            acc1 += inner1;
            acc2 += inner2;
        }
        s1_part[size_t(d)] = double(mu[size_t(d)]) * acc1;
        s2_part[size_t(d)] = double(mu[size_t(d)]) * acc2;
    }
    for (i64 d = 1; d <= X; ++d) {
        out.S1 += s1_part[size_t(d)];
        out.S2 += s2_part[size_t(d)];
    }

    // S3: u > X, tau_u from the divisor cut; inner x > X.
    i64 ulimit = V / (X + 1);
    if (ulimit > X) {
        std::vector<i64> tau = tau_table(ulimit, X, T);
        std::vector<cd> s3_part(size_t(ulimit + 1), cd(0, 0));
#pragma omp parallel for schedule(dynamic)
        for (i64 u = X + 1; u <= ulimit; ++u) {
            if (tau[size_t(u)] == 0) continue;
            cd inner(0, 0);
            for (i64 x = X + 1; x <= V / u; ++x)
                if (lam[size_t(x)] != 0.0) inner += lam[size_t(x)] * F(x * u);
            s3_part[size_t(u)] = double(tau[size_t(u)]) * inner;
        }
        for (i64 u = X + 1; u <= ulimit; ++u) out.S3 += s3_part[size_t(u)];
    }

    out.direct = blocked_sum<cd>(X + 1, V + 1,
                                 [&](i64 x) { return lam[size_t(x)] == 0.0 ? cd(0, 0) : lam[size_t(x)] * F(x); });
    return out;
}

namespace {

// Shared exact-phase evaluator for F(v) = e(alpha psi((v-b)/W)) 1_{v = b (W)},
// zero below the first admissible v = W + b.
struct CongruentPhase {
    const IntPolynomial& psi;
    i64 b, W;
    Phase alpha;
    std::vector<i64> cm;
    i64 am;
    PhaseReducer reducer;

    CongruentPhase(const IntPolynomial& psi_, i64 b_, i64 W_, const Phase& alpha_)
        : psi(psi_), b(b_), W(W_), alpha(alpha_), reducer(alpha_.theta) {
        cm.resize(psi.coeffs().size());
        for (size_t i = 0; i < cm.size(); ++i) {
            i64 c = psi.coeffs()[i] % alpha.q;
            cm[i] = c < 0 ? c + alpha.q : c;
        }
        am = alpha.a % alpha.q;
    }

    cd at_argument(i64 m) const {  // e(alpha psi(m))
        i64 xq = m % alpha.q;
        i64 r = 0;
        for (i64 c : cm) r = (r * xq + c) % alpha.q;
        r = (r * xq) % alpha.q * am % alpha.q;
        double t = double(r) / double(alpha.q);
        if (alpha.theta != 0.0) t += reducer.reduce(psi.eval(m));
        return e_of(t);
    }

    cd operator()(i64 v) const {
        if (v % W != b % W) return cd(0, 0);
        i64 m = (v - b) / W;
        if (m < 1) return cd(0, 0);
        return at_argument(m);
    }
};

}  // namespace

BilinearValue bilinear_type_i(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 U, i64 V,
                              i64 c, i64 cp, double A, double B) {
    if (W < 1 || U < 1 || V < 1) throw std::domain_error("bilinear_type_i requires W, U, V >= 1");
    i64 prod = ((c % W) * (cp % W)) % W;
    if (((prod - b) % W + W) % W != 0)
        throw std::domain_error("bilinear_type_i requires c c' = b (mod W)");
    CongruentPhase ph(psi, b, W, alpha);

    i64 c0 = ((c % W) + W) % W;
    i64 cp0 = ((cp % W) + W) % W;
    i64 first_x = c0 == 0 ? W : c0;
    std::vector<double> partial;
    for (i64 x = first_x; x <= U; x += W) {
        cd inner(0, 0);
        i64 ymax = V / x;
        i64 first_y = cp0 == 0 ? W : cp0;
        for (i64 y = first_y; y <= ymax; y += W) {
            i64 m = (x * y - b) / W;
            inner += m >= 1 ? ph.at_argument(m) : (x * y == b ? cd(1, 0) : cd(0, 0));
        }
        partial.push_back(std::abs(inner));
    }
    double value = 0.0;
    for (double p : partial) value += p;

    double k = double(psi.degree());
    double K = std::pow(2.0, k - 1.0);
    if (B <= 0.0) B = 32.0 * k * k * (k * k + K * K) * A + 1.0;
    double envelope = double(V) * std::pow(std::log(double(V)), -B / (16.0 * k * k * K * K));
    return {value, envelope};
}

cd bilinear_type_ii(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 U1, i64 U2, i64 V,
                    const PrimeTable& T) {
    if (W < 1 || U1 < 1 || U2 < U1 || V < 1) throw std::domain_error("bilinear_type_ii bad band");
    if (V > T.limit()) throw std::range_error("bilinear_type_ii requires sieve limit >= V");
    i64 X = floor_v25(V);
    CongruentPhase F(psi, b, W, alpha);
    std::vector<double> lam = mangoldt_table(V / U1 > X ? V / U1 : X, T);
    std::vector<i64> tau = tau_table(U2, X, T);
    cd out(0, 0);
    for (i64 u = U1; u <= U2; ++u) {
        if (tau[size_t(u)] == 0) continue;
        cd inner(0, 0);
        for (i64 x = X + 1; x <= V / u; ++x)
            if (lam[size_t(x)] != 0.0) inner += lam[size_t(x)] * F(x * u);
        out += double(tau[size_t(u)]) * inner;
    }
    return out;
}

MinorArcReport verify_minor_arc(const IntPolynomial& psi, i64 b, i64 W, const Phase& alpha, i64 N,
                                const PrimeTable& T, double scheme_B) {
    if (W < 1 || N < 3) throw std::domain_error("verify_minor_arc requires W >= 1, N >= 3");
    i64 b0 = b;
    if (b0 < 1 || b0 > W) {
        b0 = ((b0 % W) + W) % W;
        if (b0 == 0) b0 = W;
    }
    i64 V = narrow_i64(checked_add(checked_mul(i128(W), N), b0), "V exceeds 64-bit");
    if (V > T.limit()) throw std::range_error("verify_minor_arc requires sieve limit >= W*N + b");

    MinorArcReport rep;
    rep.alpha = alpha;
    rep.scheme_B = scheme_B;
    rep.N = N;
    rep.V = V;
    rep.X = floor_v25(V);
    ArcScheme scheme = ArcScheme::log_power(scheme_B, N, psi);
    rep.minor = !classify(scheme, alpha.real_value()).major;

    CongruentPhase F(psi, b0, W, alpha);
    VaughanSplit split = decompose([&](i64 v) { return F(v); }, V, rep.X, T);

    // prime powers p^m, m >= 2, inside (X, V] and in the b residue class
    cd ppart(0, 0);
    T.for_each_prime(2, i64(std::sqrt(double(V))) + 1, [&](i64 p) {
        double lp = std::log(double(p));
        for (i128 pk = i128(p) * p; pk <= V; pk = pk * p)
            if (i64(pk) > rep.X) ppart += lp * F(i64(pk));
    });
    // primes at or below the cut, still in the class and with (p-b)/W >= 1
    cd spart(0, 0);
    T.for_each_prime(2, std::min(rep.X, V), [&](i64 p) { spart += std::log(double(p)) * F(p); });

    double scale = double(euler_phi(W)) / double(W);
    rep.prime_power_correction = ppart;
    rep.small_prime_part = spart;
    rep.reconstructed = scale * (split.S1 - split.S2 - split.S3 - ppart + spart);
    rep.direct = weyl_sum(psi, alpha, N, Weight::prime(b0, W), &T);
    rep.residual = std::abs(rep.direct - rep.reconstructed);
    rep.ratio_to_n = std::abs(rep.direct) / double(N);
    return rep;
}

}  // namespace weylab
