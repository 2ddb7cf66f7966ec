#pragma once

#include <stdexcept>
#include <string>

namespace planesys {

// All lattice arithmetic is exact 64-bit with overflow detection.
// Overflow is a hard error (never wraparound): in-scope degrees are small,
// so any overflow signals a logic bug or out-of-scope input.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace planesys
