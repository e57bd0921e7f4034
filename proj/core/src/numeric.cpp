#include "invkl/numeric.hpp"

#include "invkl/errors.hpp"

namespace invkl {

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int catalan(unsigned long i) {
  Int b = binomial(2 * i, i);
  Int out;
  // binom(2i,i) is always divisible by i+1
  mpz_divexact_ui(out.get_mpz_t(), b.get_mpz_t(), i + 1);
  return out;
}

Rat generalized_binomial(const Rat& x, unsigned long j) {
  Rat out(1);
  for (unsigned long i = 0; i < j; ++i) {
    out *= x - Rat(static_cast<long>(i));
    out /= Rat(static_cast<long>(i) + 1);
  }
  return out;
}

Int pow2(unsigned long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace invkl
