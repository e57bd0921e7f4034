#pragma once

#include <vector>

#include "invkl/poly.hpp"

namespace invkl {

/* Truncated power series in u whose coefficients are polynomials in t
 * (rational coefficients).  The truncation order N is explicit and strict:
 * exactly the coefficients of u^0..u^N are stored, arithmetic never reads
 * beyond it, and binary operations demand equal orders -- mixing orders is
 * a programming error, not an implicit coercion. */
class USeries {
 public:
  // Zero series of the given order.
  explicit USeries(int order);
  // Pads with zero polynomials up to order+1 slots; rejects longer input.
  USeries(int order, std::vector<RatPoly> coeffs);

  static USeries constant(RatPoly value, int order);
  // value * u^k
  static USeries monomial(RatPoly value, int k, int order);

  int order() const { return order_; }
  const RatPoly& coeff(int k) const;
  void set_coeff(int k, RatPoly v);

  bool operator==(const USeries&) const = default;

  USeries operator+(const USeries& o) const;
  USeries operator-(const USeries& o) const;
  // Truncated convolution.
  USeries operator*(const USeries& o) const;
  // Multiply every coefficient by a fixed polynomial in t.
  USeries scaled(const RatPoly& s) const;

 private:
  int order_;
  std::vector<RatPoly> c_;
};

// Multiplicative inverse up to the truncation order.  Requires the u^0
// coefficient to be a nonzero rational constant (degree 0 in t); the
// general poly-constant-term case is deliberately not supported.
USeries series_inverse(const USeries& s);

// The square root sqrt(1 - 4tu^2) expanded via Catalan numbers:
// 1 - 2 * sum_{i>=1} C_{i-1} t^i u^{2i}, truncated at u^N.
USeries sqrt_one_minus_4tu2(int order);

// Q_{F_0..F_n_max} extracted from the generating function: solve
//   (sum_{n>=1} Q_n u^n) * (1 - 2u - sum_{i>=1} C_{i-1} t^i u^{2i}) = u
// by forward substitution.  The factor is (1 - 4u + sqrt(1-4tu^2))/2; note
// the minus sign on the Catalan sum, which is forced by the square-root
// expansion and by the closed form (the alternative sign yields Q_3 = 4-t
// instead of 4+t).  Coefficients must come out integral.
std::vector<IntPoly> q_fan_from_gf(int n_max);

// Y_{F_0..F_n_max} from the analogous functional equation
//   Psi_Y * (1 - 2(t+1)u + sum_{j>=0} C_j t^{j+1} u^{2j+2}) = 1 - (t+1)u.
std::vector<IntPoly> y_fan_from_gf(int n_max);

}  // namespace invkl
