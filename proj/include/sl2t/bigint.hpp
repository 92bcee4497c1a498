#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace sl2t {

// Entries of a tiling grow exponentially (the Fibonacci case already has
// growth 3), so every value that can come from a grid is an unbounded
// integer. Fixed-width arithmetic is never used for entries.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& text);

// Quotient a/b when b divides a exactly, std::nullopt otherwise. b must be
// nonzero.
inline std::optional<BigInt> exact_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a) return std::nullopt;
    return q;
}

inline long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long floormod(long long a, long long b) { return a - floordiv(a, b) * b; }

}  // namespace sl2t
