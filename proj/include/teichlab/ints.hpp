#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// Checked 64-bit integer helpers.  All committed computations in the lattice /
// Farey layer fit comfortably in int64; rather than dragging in a bignum
// dependency we detect overflow and fail loudly.

namespace teichlab {

using i64 = std::int64_t;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

// |a*d - b*c|, the workhorse determinant; intermediate products are taken in
// 128 bits so the only overflow possible is in the final result.
inline i64 checked_cross(i64 a, i64 b, i64 c, i64 d) {
    __int128 r = (__int128)a * d - (__int128)b * c;
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowError("integer overflow in cross");
    return (i64)r;
}

inline i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace teichlab
