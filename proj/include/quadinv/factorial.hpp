#pragma once

#include <initializer_list>

#include "quadinv/rational.hpp"

namespace quadinv {

// n! from a process-wide memo table. The table only grows; returned
// references stay valid for the lifetime of the program and concurrent
// callers may read and extend it.
const BigInt& factorial(long n);

// 2^k.
BigInt pow2(unsigned long k);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// n (n-1) ... (n-k+1); zero when k > n >= 0.
BigInt falling_factorial(long n, long k);

// Product of factorials over product of factorials, as an exact rational.
//
//   factorial_ratio({a, b}, {c}) == a! b! / c!
//
// Every argument must be >= 0; a negative argument means the caller's
// summation window is wrong and raises InternalError.
Rational factorial_ratio(std::initializer_list<long> numerator,
                         std::initializer_list<long> denominator);

}  // namespace quadinv
