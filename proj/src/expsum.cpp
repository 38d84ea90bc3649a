#include "weylab/expsum.hpp"

#include <cmath>
#include <stdexcept>

#include "weylab/arcs.hpp"
#include "weylab/blocked.hpp"
#include "weylab/dd.hpp"

namespace weylab {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

// q is capped so q*q fits i64 and double(r)/q keeps full precision.
constexpr i64 kMaxQ = i64(1) << 31;
}  // namespace

cd e_of(double t) {
    double f = t - std::floor(t);
    double ang = kTau * f;
    return cd(std::cos(ang), std::sin(ang));
}

Phase::Phase(i64 a_, i64 q_, double theta_) : a(a_), q(q_), theta(theta_) {
    if (q < 1) throw std::domain_error("phase denominator must be >= 1");
    if (q > kMaxQ) throw std::range_error("phase denominator beyond supported range");
    if (!(std::fabs(theta) < 1.0)) throw std::domain_error("phase offset must satisfy |theta| < 1");
    a %= q;
    if (a < 0) a += q;
    if (a == 0) a = q;  // zero residue written as a = q
    i64 g = gcd_i64(a, q);
    a /= g;
    q /= g;
}

Phase Phase::from_real(double alpha, i64 Q) {
    double f = alpha - std::floor(alpha);
    RationalApprox r = dirichlet_approx(f, Q);
    double theta = f - double(r.a) / double(r.q);
    return Phase(r.a == 0 ? r.q : r.a, r.q, theta);
}

// a * psi(x) mod q with every intermediate reduced; exact for q < 2^31.
static i64 phase_residue(const std::vector<i64>& coeffs_mod, i64 a_mod, i64 x, i64 q) {
    i64 xq = x % q;
    i64 r = 0;
    for (i64 c : coeffs_mod) r = (r * xq + c) % q;
    r = (r * xq) % q;
    return (r * a_mod) % q;
}

static std::vector<i64> reduce_coeffs(const IntPolynomial& psi, i64 q) {
    std::vector<i64> cm(psi.coeffs().size());
    for (size_t i = 0; i < cm.size(); ++i) {
        i64 c = psi.coeffs()[i] % q;
        cm[i] = c < 0 ? c + q : c;
    }
    return cm;
}

cd complete_sum(const IntPolynomial& psi, i64 a, i64 q) {
    if (q < 1 || q > kMaxQ) throw std::domain_error("complete_sum requires 1 <= q < 2^31");
    std::vector<i64> cm = reduce_coeffs(psi, q);
    i64 am = ((a % q) + q) % q;
    return blocked_sum<cd>(1, q + 1, [&](i64 r) {
        return e_of(double(phase_residue(cm, am, r, q)) / double(q));
    });
}

cd restricted_complete_sum(const IntPolynomial& psi, i64 a, i64 q, i64 b, i64 W) {
    if (q < 1 || q > kMaxQ) throw std::domain_error("restricted_complete_sum requires 1 <= q < 2^31");
    if (W < 1) throw std::domain_error("restricted_complete_sum requires W >= 1");
    std::vector<i64> cm = reduce_coeffs(psi, q);
    i64 am = ((a % q) + q) % q;
    i64 Wm = W % q, bm = ((b % q) + q) % q;
    return blocked_sum<cd>(1, q + 1, [&](i64 r) {
        i64 res = (Wm * (r % q) + bm) % q;
        if (gcd_i64(res, q) != 1) return cd(0, 0);
        return e_of(double(phase_residue(cm, am, r, q)) / double(q));
    });
}

namespace {

// Per-x weight evaluation context; prime-table lookups and the forward
// difference are resolved once up front.
struct WeightEval {
    const Weight& w;
    const PrimeTable* T;
    GenPolynomial psi_delta;
    double phi_ratio = 1.0;
    i64 b0 = 1;

    WeightEval(const IntPolynomial& psi, const Weight& w_, const PrimeTable* T_) : w(w_), T(T_) {
        if (w.needs_sieve()) {
            if (!T) throw std::domain_error("prime-weighted sum requires a sieve table");
            if (w.W < 1) throw std::domain_error("weight requires W >= 1");
            b0 = w.b;
            if (b0 < 1 || b0 > w.W) {
                b0 = ((b0 % w.W) + w.W) % w.W;
                if (b0 == 0) b0 = w.W;
            }
            phi_ratio = double(euler_phi(w.W)) / double(w.W);
        }
        if (w.kind == WeightKind::DeltaPrime) psi_delta = delta(psi);
    }

    double operator()(i64 x) const {
        switch (w.kind) {
            case WeightKind::Unit:
                return 1.0;
            case WeightKind::Poly:
                return double(w.h.eval(x));
            case WeightKind::PrimeWeight: {
                i64 n = w.W * x + b0;
                if (!T->is_prime(n)) return 0.0;
                return phi_ratio * std::log(double(n));
            }
            case WeightKind::DeltaPrime: {
                i64 n = w.W * x + b0;
                if (!T->is_prime(n)) return 0.0;
                return double(psi_delta.eval(x - 1)) * phi_ratio * std::log(double(n));
            }
        }
        return 0.0;
    }

    void check_range(i64 N) const {
        if (!w.needs_sieve()) return;
        i128 top = checked_add(checked_mul(i128(w.W), N), b0);
        if (top > T->limit()) throw std::range_error("weyl sum needs sieve limit >= W*N + b");
    }
};

}  // namespace

cd weyl_sum(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w, const PrimeTable* T) {
    if (N < 0) throw std::domain_error("weyl_sum requires N >= 0");
    WeightEval wv(psi, w, T);
    wv.check_range(N);

    const i64 q = alpha.q;
    std::vector<i64> cm = reduce_coeffs(psi, q);
    const i64 am = alpha.a % q;
    const bool with_theta = alpha.theta != 0.0;
    const PhaseReducer reducer(alpha.theta);

    return blocked_sum<cd>(1, N + 1, [&](i64 x) {
        double wx = wv(x);
        if (wx == 0.0) return cd(0, 0);
        double t = double(phase_residue(cm, am, x, q)) / double(q);
        if (with_theta) t += reducer.reduce(psi.eval(x));
        return wx * e_of(t);
    });
}

std::vector<double> weight_values(const IntPolynomial& psi, const Weight& w, i64 N, const PrimeTable* T) {
    WeightEval wv(psi, w, T);
    wv.check_range(N);
    std::vector<double> out(size_t(N + 1), 0.0);
    for (i64 x = 1; x <= N; ++x) out[size_t(x)] = wv(x);
    return out;
}

// sum_{x=1}^{P} e(theta x) in closed form (Dirichlet kernel).
static cd geometric_sum(double theta, i128 P) {
    if (P <= 0) return cd(0, 0);
    double Pd = double(P);
    double s = std::sin(M_PI * theta);
    if (s == 0.0) return cd(Pd, 0.0);
    double num = std::sin(M_PI * theta * Pd);
    return e_of(theta * (Pd + 1.0) / 2.0) * (num / s);
}

cd major_arc_approx(const IntPolynomial& psi, const Phase& alpha, i64 N, const Weight& w,
                    bool use_delta_identity, i64 q_cutoff) {
    if (alpha.q > q_cutoff) throw std::domain_error("major_arc_approx: q beyond arc cutoff");
    const double theta = alpha.theta;
    const PhaseReducer reducer(theta);

    cd prefactor;
    switch (w.kind) {
        case WeightKind::Unit:
        case WeightKind::Poly:
            prefactor = complete_sum(psi, alpha.a, alpha.q) / double(alpha.q);
            break;
        case WeightKind::PrimeWeight:
        case WeightKind::DeltaPrime: {
            i64 Wq = narrow_i64(checked_mul(i128(w.W), alpha.q), "phi argument exceeds 64-bit");
            prefactor = restricted_complete_sum(psi, alpha.a, alpha.q, w.b, w.W) *
                        (double(euler_phi(w.W)) / double(euler_phi(Wq)));
            break;
        }
    }

    cd inner;
    if (w.kind == WeightKind::DeltaPrime && use_delta_identity) {
        inner = geometric_sum(theta, psi.eval(N));
    } else {
        GenPolynomial hd;
        bool use_delta_poly = w.kind == WeightKind::DeltaPrime;
        if (use_delta_poly) hd = delta(psi);
        inner = blocked_sum<cd>(1, N + 1, [&](i64 x) {
            double hx = 1.0;
            if (w.kind == WeightKind::Poly) hx = double(w.h.eval(x));
            if (use_delta_poly) hx = double(hd.eval(x - 1));
            double t = theta == 0.0 ? 0.0 : reducer.reduce(psi.eval(x));
            return hx * e_of(t);
        });
    }
    return prefactor * inner;
}

WeylBoundValue weyl_bound(const IntPolynomial& psi, i64 /*a*/, i64 q, i64 V, double eps) {
    if (q < 1 || V < 1) throw std::domain_error("weyl_bound requires q >= 1, V >= 1");
    const double k = double(psi.degree());
    const double K = std::pow(2.0, k - 1.0);
    const double a1 = std::fabs(double(psi.leading()));
    const double Vd = double(V), qd = double(q);

    WeylBoundValue out;
    double bracket = 1.0 / qd + 1.0 / Vd + qd / (a1 * std::pow(Vd, k));
    double logf = std::log(a1 * qd * Vd);
    double exponent = (k - 1.0) * (k - 1.0) / (2.0 * K);
    out.envelope = Vd * (std::pow(Vd, -1.0 / K) +
                         std::pow(a1, 1.0 / (2.0 * K)) * std::pow(logf, exponent) *
                             std::pow(bracket, 1.0 / (2.0 * K)));
    double coarse_bracket = a1 / qd + a1 / Vd + qd / std::pow(Vd, k);
    out.coarse = std::pow(Vd, 1.0 + eps) * std::pow(coarse_bracket, std::pow(2.0, 1.0 - k));
    return out;
}

}  // namespace weylab
