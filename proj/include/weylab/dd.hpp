#pragma once
#include <cmath>

#include "weylab/checked.hpp"

namespace weylab {

// Compensated (double-double) arithmetic, just enough to reduce theta * psi(x)
// mod 1 without losing the fractional part when psi(x) is large. A value is
// hi + lo with |lo| <= ulp(hi)/2.
struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd dd_mul_double(dd a, double b) {
    dd p = two_prod(a.hi, b);
    double lo = std::fma(a.lo, b, p.lo);
    return quick_two_sum(p.hi, lo);
}

// Fractional part centered in (-1, 1); exact on the hi word because hi and
// nearbyint(hi) share a common ulp grid for |hi| < 2^52.
inline dd dd_frac(dd a) {
    double n = std::nearbyint(a.hi);
    dd r = quick_two_sum(a.hi - n, a.lo);
    if (r.hi >= 1.0) r = quick_two_sum(r.hi - 1.0, r.lo);
    if (r.hi <= -1.0) r = quick_two_sum(r.hi + 1.0, r.lo);
    return r;
}

// theta * v mod 1 for a 128-bit integer v, split into 32-bit limbs. Each limb
// contributes frac(theta * 2^{32 j}) * limb, accumulated in double-double; the
// per-limb fractional tables keep every intermediate below 2^33 so the frac
// steps stay exact.
class PhaseReducer {
public:
    explicit PhaseReducer(double theta) {
        dd c{theta, 0.0};
        for (int j = 0; j < kLimbs; ++j) {
            c = dd_frac(c);
            frac_[j] = c;
            c = dd_mul_double(c, 4294967296.0);  // exact scaling by 2^32
        }
    }

    // Returns frac(theta * v) in (-1, 1).
    double reduce(i128 v) const {
        bool neg = v < 0;
        u128 u = neg ? u128(-v) : u128(v);
        dd acc{0.0, 0.0};
        int j = 0;
        while (u != 0 && j < kLimbs) {
            double limb = double(u64(u & 0xffffffffu));
            if (limb != 0.0) acc = dd_add(acc, dd_frac(dd_mul_double(frac_[j], limb)));
            u >>= 32;
            ++j;
        }
        double f = dd_frac(acc).hi;
        return neg ? -f : f;
    }

private:
    static constexpr int kLimbs = 4;
    dd frac_[kLimbs];
};

}  // namespace weylab
