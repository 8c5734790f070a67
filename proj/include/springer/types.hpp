#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace springer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Object counts grow super-exponentially; enumerators refuse larger n unless
// the caller raises the cap explicitly.
inline constexpr int kDefaultEnumerationCap = 10;

// Triangle rows stay cheap well past this, but nobody needs them by default.
inline constexpr int kDefaultTriangleCap = 64;

inline constexpr int kDefaultSeriesOrder = 16;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace springer
