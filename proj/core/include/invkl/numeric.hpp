#pragma once

#include <gmpxx.h>

namespace invkl {

// All coefficient arithmetic is exact: arbitrary-precision integers and
// rationals.  mpq_class keeps values canonical (positive denominator,
// gcd(num, den) = 1) through every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

// binom(n, k) for machine-word arguments; 0 when k > n.
Int binomial(unsigned long n, unsigned long k);

// C_i = binom(2i, i)/(i+1); the division is exact.
Int catalan(unsigned long i);

// x(x-1)...(x-j+1)/j! for rational x; j = 0 gives 1.  Agrees with the
// ordinary binomial coefficient for integer x >= 0 (including the
// vanishing cases j > x).
Rat generalized_binomial(const Rat& x, unsigned long j);

// 2^e as an Int (e >= 0).
Int pow2(unsigned long e);

}  // namespace invkl
