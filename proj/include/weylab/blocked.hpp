#pragma once
#include <vector>

#include "weylab/checked.hpp"

namespace weylab {

// Deterministic parallel reduction: terms are summed serially inside
// fixed-size 4096-term blocks, block results combined by a fixed pairwise
// tree. The floating result is identical for any thread count.
inline constexpr i64 kSumBlock = 4096;

template <class T, class TermFn>
T blocked_sum(i64 lo, i64 hi, TermFn term) {  // half-open [lo, hi)
    if (hi <= lo) return T{};
    const i64 n = hi - lo;
    const i64 nblocks = (n + kSumBlock - 1) / kSumBlock;
    std::vector<T> partial(size_t(nblocks), T{});
#pragma omp parallel for schedule(static)
    for (i64 b = 0; b < nblocks; ++b) {
        const i64 first = lo + b * kSumBlock;
        const i64 last = std::min(hi, first + kSumBlock);
        T acc{};
        for (i64 i = first; i < last; ++i) acc += term(i);
        partial[size_t(b)] = acc;
    }
    i64 len = nblocks;
    while (len > 1) {
        i64 half = len / 2;
        for (i64 i = 0; i < half; ++i) partial[size_t(i)] = partial[size_t(2 * i)] + partial[size_t(2 * i + 1)];
        if (len & 1) partial[size_t(half)] = partial[size_t(len - 1)];
        len = half + (len & 1);
    }
    return partial[0];
}

}  // namespace weylab
