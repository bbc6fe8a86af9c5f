#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace indset {

/// Exact count of independent sets. All counting is done in 128 bits with
/// explicit overflow detection.
using Count = unsigned __int128;

template <typename T>
[[nodiscard]] constexpr T checked_add(T x, T y) {
    T r{};
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("checked_add: result does not fit");
    return r;
}

template <typename T>
[[nodiscard]] constexpr T checked_mul(T x, T y) {
    T r{};
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("checked_mul: result does not fit");
    return r;
}

template <typename T>
[[nodiscard]] constexpr T gcd_of(T x, T y) {
    while (y != 0) {
        T t = x % y;
        x = y;
        y = t;
    }
    return x;
}

[[nodiscard]] inline std::string to_string(Count v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

/// Parses a nonnegative decimal integer into 128 bits; throws FormatError on junk or overflow.
[[nodiscard]] inline Count parse_count(const std::string& text) {
    if (text.empty()) throw FormatError("empty integer");
    Count v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw FormatError("not a nonnegative integer: '" + text + "'");
        try {
            v = checked_add(checked_mul(v, Count{10}), Count(static_cast<unsigned>(c - '0')));
        } catch (const OverflowError&) {
            throw FormatError("integer does not fit in 128 bits: '" + text + "'");
        }
    }
    return v;
}

/// Narrowing that refuses to lose information.
[[nodiscard]] inline std::uint64_t to_u64(Count v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

} // namespace indset
