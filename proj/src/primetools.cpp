#include "weylab/primetools.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace weylab {

namespace {
constexpr i64 kSegmentOdds = i64(1) << 20;  // odds per segment; multiple of 64
constexpr u64 kCacheMagic = 0x31565357u;    // "WSV1" little-endian
constexpr u64 kCacheVersion = 1;
}  // namespace

PrimeTable PrimeTable::build(i64 limit, i64 memory_budget_bytes) {
    if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
    i64 n_odds = limit >= 3 ? (limit - 1) / 2 : 0;  // odds in [3, limit]
    i64 words = (n_odds + 63) / 64;
    if (words * 8 > memory_budget_bytes)
        throw resource_error("sieve limit exceeds memory budget");

    PrimeTable T;
    T.limit_ = limit;
    T.bits_.assign(size_t(words), ~u64(0));
    if (n_odds > 0) {
        // mask tail bits beyond the last odd <= limit
        i64 tail = n_odds % 64;
        if (tail) T.bits_.back() = (~u64(0)) >> (64 - tail);
    }

    // Base odd primes up to sqrt(limit) by a plain sieve.
    i64 root = i64(std::sqrt(double(limit))) + 2;
    while (root * root > limit) --root;
    std::vector<bool> small(size_t(root + 1), true);
    std::vector<i64> base;
    for (i64 p = 3; p <= root; p += 2)
        if (small[size_t(p)]) {
            base.push_back(p);
            for (i64 m = p * p; m <= root; m += 2 * p)
                if (m & 1) small[size_t(m)] = false;
        }

    i64 n_segments = (n_odds + kSegmentOdds - 1) / kSegmentOdds;
#pragma omp parallel for schedule(dynamic)
    for (i64 s = 0; s < n_segments; ++s) {
        i64 idx_lo = s * kSegmentOdds;                            // odd value 2*idx+3
        i64 idx_hi = std::min(idx_lo + kSegmentOdds, n_odds) - 1;
        i64 val_hi = 2 * idx_hi + 3;
        for (i64 p : base) {
            if (p * p > val_hi) break;
            // first odd multiple of p that is >= max(p^2, segment start)
            i64 start = std::max(p * p, ((2 * idx_lo + 3 + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;
            for (i64 m = start; m <= val_hi; m += 2 * p) {
                i64 idx = (m - 3) >> 1;
                if (idx >= idx_lo)
                    T.bits_[size_t(idx >> 6)] &= ~(u64(1) << (idx & 63));
            }
        }
    }
    T.base_primes_.swap(base);
    return T;
}

void PrimeTable::build_base_primes() {
    i64 root = i64(std::sqrt(double(limit_))) + 2;
    while (root * root > limit_) --root;
    base_primes_.clear();
    for (i64 p = 3; p <= root; p += 2)
        if (odd_bit(p)) base_primes_.push_back(p);
}

bool PrimeTable::is_prime(i64 n) const {
    if (n > limit_) throw std::range_error("primality query beyond sieve limit");
    if (n < 2) return false;
    if (n == 2) return true;
    if ((n & 1) == 0) return false;
    return odd_bit(n);
}

i64 PrimeTable::count_primes() const {
    i64 c = limit_ >= 2 ? 1 : 0;
    for (u64 w : bits_) c += __builtin_popcountll(w);
    return c;
}

void PrimeTable::save(const std::string& path) const {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw resource_error("cannot open cache file for writing: " + path);
    u64 header[2] = {kCacheMagic | (kCacheVersion << 32), u64(limit_)};
    bool ok = std::fwrite(header, sizeof(header), 1, f) == 1;
    ok = ok && (bits_.empty() || std::fwrite(bits_.data(), sizeof(u64), bits_.size(), f) == bits_.size());
    ok = (std::fclose(f) == 0) && ok;
    if (!ok) throw resource_error("cache write failed: " + path);
}

PrimeTable PrimeTable::load_or_build(i64 limit, const std::string& cache_path, i64 memory_budget_bytes) {
    FILE* f = std::fopen(cache_path.c_str(), "rb");
    if (f) {
        u64 header[2];
        if (std::fread(header, sizeof(header), 1, f) == 1 && (header[0] & 0xffffffffu) == kCacheMagic &&
            (header[0] >> 32) == kCacheVersion && i64(header[1]) >= limit) {
            i64 file_limit = i64(header[1]);
            i64 n_odds = file_limit >= 3 ? (file_limit - 1) / 2 : 0;
            i64 words = (n_odds + 63) / 64;
            if (words * 8 <= memory_budget_bytes) {
                PrimeTable T;
                T.limit_ = file_limit;
                T.bits_.resize(size_t(words));
                if (std::fread(T.bits_.data(), sizeof(u64), T.bits_.size(), f) == T.bits_.size()) {
                    std::fclose(f);
                    T.from_cache_ = true;
                    T.build_base_primes();
                    return T;
                }
            }
        }
        std::fclose(f);
    }
    PrimeTable T = build(limit, memory_budget_bytes);
    T.save(cache_path);
    return T;
}

std::vector<std::pair<i64, int>> PrimeTable::factor(i64 x) const {
    if (x < 1) throw std::domain_error("factorization requires x >= 1");
    std::vector<std::pair<i64, int>> out;
    int e2 = 0;
    while ((x & 1) == 0) {
        x >>= 1;
        ++e2;
    }
    if (e2) out.emplace_back(2, e2);
    for (i64 p : base_primes_) {
        if (p * p > x) break;
        if (x % p == 0) {
            int e = 0;
            do {
                x /= p;
                ++e;
            } while (x % p == 0);
            out.emplace_back(p, e);
        }
    }
    if (x > 1) {
        // remaining cofactor is prime provided x <= limit^2
        if (x > limit_ && double(x) > double(limit_) * double(limit_))
            throw std::range_error("factorization beyond sieve coverage");
        out.emplace_back(x, 1);
    }
    return out;
}

double PrimeTable::von_mangoldt(i64 x) const {
    if (x < 1) throw std::domain_error("von_mangoldt requires x >= 1");
    if (x == 1) return 0.0;
    auto fs = factor(x);
    if (fs.size() != 1) return 0.0;
    return std::log(double(fs[0].first));
}

int PrimeTable::mobius(i64 x) const {
    auto fs = factor(x);
    for (auto& [p, e] : fs)
        if (e > 1) return 0;
    return (fs.size() & 1) ? -1 : 1;
}

i64 PrimeTable::divisor_k(int k, i64 x) const {
    if (k < 1) throw std::domain_error("divisor_k requires k >= 1");
    auto fs = factor(x);
    i128 d = 1;
    for (auto& [p, e] : fs) {
        // C(e + k - 1, k - 1)
        i128 c = 1;
        for (int j = 1; j <= k - 1; ++j) c = checked_mul(c, e + j) / j;
        d = checked_mul(d, c);
    }
    return narrow_i64(d, "divisor_k exceeds 64-bit");
}

i64 euler_phi(i64 n) {
    if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
    i64 r = n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<i64> lambda_membership(const PrimeTable& T, i64 b, i64 W, i64 N, bool* warned) {
    if (W < 1 || N < 0) throw std::domain_error("lambda_membership requires W >= 1, N >= 0");
    bool warn = false;
    i64 b0 = b;
    if (b < 1 || b > W) {
        b0 = ((b % W) + W) % W;
        if (b0 == 0) b0 = W;
        warn = true;
    }
    if (gcd_i64(b0, W) > 1) warn = true;
    if (warned) *warned = warn;
    i128 top = checked_add(checked_mul(i128(W), N), b0);
    if (top > T.limit()) throw std::range_error("lambda_membership needs sieve limit >= W*N + b");
    std::vector<i64> xs;
    for (i64 x = 1; x <= N; ++x)
        if (T.is_prime(W * x + b0)) xs.push_back(x);
    return xs;
}

double lambda_weight(const PrimeTable& T, i64 b, i64 W, i64 x) {
    if (W < 1 || x < 0) throw std::domain_error("lambda_weight requires W >= 1, x >= 0");
    i64 b0 = b;
    if (b < 1 || b > W) {
        b0 = ((b % W) + W) % W;
        if (b0 == 0) b0 = W;
    }
    i128 v = checked_add(checked_mul(i128(W), x), b0);
    if (v > T.limit()) throw std::range_error("lambda_weight needs sieve limit >= W*x + b");
    i64 n = i64(v);
    if (n < 2 || !T.is_prime(n)) return 0.0;
    return double(euler_phi(W)) / double(W) * std::log(double(n));
}

double sw_discrepancy(const PrimeTable& T, i64 q, i64 b, i64 y) {
    if (q < 1 || y < 2) throw std::domain_error("sw_discrepancy requires q >= 1, y >= 2");
    if (gcd_i64(((b % q) + q) % q, q) > 1 && q > 1)
        throw std::domain_error("sw_discrepancy requires gcd(b, q) = 1");
    i64 b0 = ((b % q) + q) % q;
    double s = 0.0;
    T.for_each_prime(2, y, [&](i64 p) {
        if (p % q == b0) s += std::log(double(p));
    });
    return s - double(y) / double(euler_phi(q));
}

}  // namespace weylab
