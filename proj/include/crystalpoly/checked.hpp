#pragma once

#include <cstdint>
#include <stdexcept>

namespace crystalpoly {

using Int = std::int64_t;
using Index = std::int64_t;

// All engine arithmetic is exact. A wrapped intermediate would silently
// corrupt crystal data, so overflow is a hard error, never wraparound.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}

} // namespace crystalpoly
