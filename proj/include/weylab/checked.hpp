#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Resource-scale failures (memory budget, cache limits). CLI maps these to a
// distinct exit code from precondition violations.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& w) : std::runtime_error(w) {}
};

// Overflow-checked 128-bit ops: arithmetic that leaves the representable range
// must surface as an error, never wrap.
inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::range_error("128-bit overflow in addition");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::range_error("128-bit overflow in multiplication");
    return r;
}

inline i64 narrow_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::range_error(what);
    return i64(v);
}

std::string to_string_i128(i128 v);

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

}  // namespace weylab
