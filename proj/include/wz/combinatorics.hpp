#pragma once

#include "wz/big_rational.hpp"

namespace wz::combinatorics {

// n! as an arbitrary-precision integer.
BigInt factorial(unsigned long n);

// C(n, k) = n! / (k! (n-k)!) computed from big factorials; 0 when k > n.
// Deliberately independent of the hypergeometric-term machinery.
BigInt binomial(unsigned long n, unsigned long k);

} // namespace wz::combinatorics
