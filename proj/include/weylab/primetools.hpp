#pragma once
#include <string>
#include <vector>

#include "weylab/checked.hpp"

namespace weylab {

// Primality bitset over [2, limit], built by a segmented sieve (2^20-element
// segments) and cacheable to a binary file. Immutable after construction;
// queries are thread-safe.
class PrimeTable {
public:
    static PrimeTable build(i64 limit, i64 memory_budget_bytes = kDefaultBudget);
    // Loads the cache if it exists and covers `limit`; otherwise builds and
    // writes the cache. Returns the table actually backed by the file (its
    // limit may exceed the request).
    static PrimeTable load_or_build(i64 limit, const std::string& cache_path,
                                    i64 memory_budget_bytes = kDefaultBudget);

    i64 limit() const { return limit_; }
    bool loaded_from_cache() const { return from_cache_; }
    bool is_prime(i64 n) const;
    void save(const std::string& path) const;

    i64 count_primes() const;
    // Calls f(p) for each prime p in [lo, hi] in increasing order.
    template <class F>
    void for_each_prime(i64 lo, i64 hi, F f) const {
        if (hi > limit_) throw std::range_error("for_each_prime beyond sieve limit");
        if (lo <= 2 && hi >= 2) f(i64(2));
        i64 start = std::max<i64>(3, lo | 1);
        for (i64 n = start; n <= hi; n += 2)
            if (odd_bit(n)) f(n);
    }

    // Von Mangoldt Lambda(x): log p when x = p^m, else 0. Natural log.
    double von_mangoldt(i64 x) const;
    // Moebius mu(x) via factorization.
    int mobius(i64 x) const;
    // d_k(x) = #ordered factorizations into k parts = prod C(e_i + k - 1, k - 1).
    i64 divisor_k(int k, i64 x) const;
    // Prime factorization (p, e) pairs; requires x <= limit^2.
    std::vector<std::pair<i64, int>> factor(i64 x) const;

    static constexpr i64 kDefaultBudget = i64(1) << 28;  // 256 MiB of bitset

private:
    PrimeTable() = default;
    bool odd_bit(i64 n) const {  // n odd, >= 3
        u64 idx = u64(n - 3) >> 1;
        return (bits_[idx >> 6] >> (idx & 63)) & 1u;
    }
    void build_base_primes();

    i64 limit_ = 0;
    std::vector<u64> bits_;        // bit i <-> odd number 2i+3 is prime
    std::vector<i64> base_primes_; // primes <= sqrt(limit), for factoring
    bool from_cache_ = false;
};

i64 euler_phi(i64 n);

// Members of Lambda_{b,W} = {x in [1, N] : W x + b prime}. b is reduced mod W
// into [1, W] when outside; *warned is set when that happens or when
// gcd(b, W) > 1 (the class then carries at most one prime).
std::vector<i64> lambda_membership(const PrimeTable& T, i64 b, i64 W, i64 N, bool* warned = nullptr);

// lambda_{b,W}(x) = (phi(W)/W) log(W x + b) when W x + b is prime, else 0.
double lambda_weight(const PrimeTable& T, i64 b, i64 W, i64 x);

// sum_{p <= y, p = b mod q} log p  -  y / phi(q); requires gcd(b, q) = 1.
double sw_discrepancy(const PrimeTable& T, i64 q, i64 b, i64 y);

}  // namespace weylab
