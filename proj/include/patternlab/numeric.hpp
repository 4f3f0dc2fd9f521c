#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace patternlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_int(BigInt base, std::uint64_t exp) {
    BigInt acc = 1;
    while (exp != 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

/// C(n, k) as an exact big integer; 0 for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

inline BigInt factorial(std::int64_t n) {
    BigInt acc = 1;
    for (std::int64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline BigRat rat_pow(const BigRat& base, std::uint64_t exp) {
    BigRat acc = 1;
    BigRat b = base;
    while (exp != 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace patternlab
