#include "weylab/polycore.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylab {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(-v) : u128(v);
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

IntPolynomial::IntPolynomial(std::vector<i64> coeffs_high_first) : coeffs_(std::move(coeffs_high_first)) {
    while (!coeffs_.empty() && coeffs_.front() == 0) coeffs_.erase(coeffs_.begin());
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial rejected");
    k_ = i64(coeffs_.size());
    i64 trailing = 0;
    while (trailing < i64(coeffs_.size()) && coeffs_[size_t(k_ - 1 - trailing)] == 0) ++trailing;
    t_ = trailing + 1;
}

i64 IntPolynomial::gcd_coeffs() const {
    i64 g = 0;
    for (i64 c : coeffs_) g = gcd_i64(g, c);
    return g;
}

i128 IntPolynomial::eval(i64 x) const {
    i128 r = 0;
    for (i64 c : coeffs_) r = checked_add(checked_mul(r, x), c);
    return checked_mul(r, x);
}

bool IntPolynomial::eval_leq(i64 x, i128 bound) const {
    try {
        return eval(x) <= bound;
    } catch (const std::range_error&) {
        // Only reached during bracketing of increasing psi: overflow means the
        // value is far beyond any 128-bit bound.
        return false;
    }
}

static std::string monomial_text(i64 c, i64 d, bool first) {
    std::string s;
    if (c < 0)
        s += first ? "-" : "- ";
    else if (!first)
        s += "+ ";
    i64 a = c < 0 ? -c : c;
    if (a != 1 || d == 0) s += std::to_string(a);
    if (d >= 1) {
        s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

std::string IntPolynomial::text() const {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) s += " ";
        s += monomial_text(coeffs_[i], k_ - i64(i), first);
        first = false;
    }
    return s;
}

GenPolynomial::GenPolynomial(std::vector<i64> coeffs_high_first) : coeffs_(std::move(coeffs_high_first)) {
    while (coeffs_.size() > 1 && coeffs_.front() == 0) coeffs_.erase(coeffs_.begin());
    if (coeffs_.empty()) coeffs_.push_back(0);
}

i128 GenPolynomial::eval(i64 x) const {
    i128 r = 0;
    for (i64 c : coeffs_) r = checked_add(checked_mul(r, x), c);
    return r;
}

std::string GenPolynomial::text() const {
    std::string s;
    bool first = true;
    i64 deg = degree();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0 && !(first && i + 1 == coeffs_.size())) continue;
        if (!first) s += " ";
        s += monomial_text(coeffs_[i], deg - i64(i), first);
        first = false;
    }
    return s;
}

GenPolynomial delta(const IntPolynomial& psi) {
    i64 k = psi.degree();
    // shifted[j] accumulates the coefficient of x^{k-j} in psi(x+1).
    std::vector<i128> shifted(size_t(k + 1), 0);
    // Binomial expansion monomial by monomial: a x^d -> a * sum_j C(d,j) x^j.
    for (size_t i = 0; i < psi.coeffs().size(); ++i) {
        i64 a = psi.coeffs()[i];
        if (a == 0) continue;
        i64 d = k - i64(i);
        i128 binom = 1;
        for (i64 j = d; j >= 0; --j) {
            // binom = C(d, j) maintained downward: C(d,d)=1, C(d,j-1)=C(d,j)*j/(d-j+1)
            shifted[size_t(k - j)] = checked_add(shifted[size_t(k - j)], checked_mul(a, binom));
            if (j > 0) binom = checked_mul(binom, j) / (d - j + 1);
        }
    }
    // subtract psi(x)
    for (size_t i = 0; i < psi.coeffs().size(); ++i)
        shifted[i] = checked_add(shifted[i], -i128(psi.coeffs()[i]));
    std::vector<i64> out;
    out.reserve(shifted.size());
    for (i128 c : shifted) out.push_back(narrow_i64(c, "difference coefficient exceeds 64-bit"));
    return GenPolynomial(std::move(out));
}

IntPolynomial rescale(const IntPolynomial& psi, i64 q) {
    if (q < 1) throw std::domain_error("rescale requires q >= 1");
    i64 k = psi.degree(), t = psi.lowtrim();
    std::vector<i64> out(psi.coeffs());
    for (size_t i = 0; i < out.size(); ++i) {
        i64 d = k - i64(i);
        if (out[i] == 0) continue;
        if (d < t) throw std::logic_error("lowtrim invariant broken");
        i128 c = out[i];
        for (i64 e = 0; e < d - t; ++e) c = checked_mul(c, q);
        out[i] = narrow_i64(c, "rescaled coefficient exceeds 64-bit");
    }
    return IntPolynomial(std::move(out));
}

Fraction::Fraction(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

RationalPolynomial::RationalPolynomial(std::vector<Fraction> coeffs_high_first)
    : coeffs_(std::move(coeffs_high_first)) {
    while (!coeffs_.empty() && coeffs_.front().num == 0) coeffs_.erase(coeffs_.begin());
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial rejected");
}

std::string RationalPolynomial::text() const {
    std::string s;
    bool first = true;
    i64 k = degree();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Fraction& f = coeffs_[i];
        if (f.num == 0) continue;
        if (!first) s += " ";
        std::string mono = monomial_text(f.num, k - i64(i), first);
        if (f.den != 1) mono += "/" + std::to_string(f.den);
        s += mono;
        first = false;
    }
    return s;
}

ClearedPolynomial clear_denominators(const RationalPolynomial& psi) {
    i64 W = 1;
    for (const Fraction& f : psi.coeffs()) {
        if (f.num == 0) continue;
        i64 g = gcd_i64(W, f.den);
        W = narrow_i64(checked_mul(W / g, f.den), "denominator lcm exceeds 64-bit");
    }
    i64 k = psi.degree();
    std::vector<i64> out(size_t(k), 0);
    for (size_t i = 0; i < psi.coeffs().size(); ++i) {
        const Fraction& f = psi.coeffs()[i];
        if (f.num == 0) continue;
        i64 d = k - i64(i);
        i128 scale = 1;  // W^d; d >= 1 so den | W | W^d divides exactly
        for (i64 e = 0; e < d; ++e) scale = checked_mul(scale, W);
        i128 c = checked_mul(i128(f.num), scale / f.den);
        out[i] = narrow_i64(c, "cleared coefficient exceeds 64-bit");
    }
    return {W, IntPolynomial(std::move(out))};
}

// Positivity of the forward difference proves strict monotonicity. Beyond the
// Cauchy root bound the difference keeps the sign of its leading coefficient,
// so a finite scan suffices.
static void check_increasing(const IntPolynomial& psi, i64 M) {
    if (M <= 0) return;
    GenPolynomial d = delta(psi);
    if (d.coeffs().front() <= 0)
        throw std::domain_error("psi is not strictly increasing (nonpositive leading difference)");
    i64 lead = d.coeffs().front();
    i128 maxratio = 0;
    for (i64 c : d.coeffs()) {
        i128 r = (c < 0 ? -i128(c) : i128(c)) / lead + 1;
        maxratio = std::max(maxratio, r);
    }
    i128 scan_to128 = std::min(i128(M), maxratio + 1);
    constexpr i64 kScanCap = 10'000'000;
    if (scan_to128 > kScanCap)
        throw std::domain_error("monotonicity check infeasible for this coefficient range");
    i64 scan_to = i64(scan_to128);
    for (i64 x = 1; x <= scan_to; ++x)
        if (d.eval(x) <= 0) throw std::domain_error("psi is not strictly increasing on [1, M]");
}

i64 inverse_max(const IntPolynomial& psi, i128 n) {
    if (!psi.eval_leq(1, n)) {
        check_increasing(psi, 1);
        return 0;
    }
    i64 hi = 1;
    while (psi.eval_leq(hi, n)) {
        if (hi > (INT64_MAX >> 1)) throw std::range_error("inverse_max bracket exceeds 64-bit");
        hi <<= 1;
    }
    i64 lo = hi >> 1;  // psi(lo) <= n < psi(hi)
    while (hi - lo > 1) {
        i64 mid = lo + (hi - lo) / 2;
        if (psi.eval_leq(mid, n))
            lo = mid;
        else
            hi = mid;
    }
    check_increasing(psi, lo + 1);
    return lo;
}

}  // namespace weylab
