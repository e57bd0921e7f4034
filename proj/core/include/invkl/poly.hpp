#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invkl/errors.hpp"
#include "invkl/numeric.hpp"

namespace invkl {

/* Dense univariate polynomial over an exact coefficient ring.
 *
 * Coefficients are stored ascending by power of t and trailing zeros are
 * trimmed on every construction, so the representation is canonical and
 * operator== is plain coefficient equality.  The zero polynomial is the
 * empty sequence; its degree is deliberately an error rather than a
 * sentinel, because every degree-dependent formula in this library
 * (reversal bounds, Hadamard normalization) is meaningless for it.
 *
 * Everything here is immutable-after-construction in spirit: operations
 * return fresh values, so sharing Poly objects across threads is safe. */
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(C v) { return Poly(std::vector<C>{std::move(v)}); }

  // v * t^k
  static Poly monomial(C v, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<C> c(static_cast<std::size_t>(k) + 1);
    c.back() = std::move(v);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  int degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  // Coefficient of t^i; zero outside the stored range.
  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<C>& coeffs() const { return c_; }

  bool operator==(const Poly&) const = default;

  Poly operator-() const {
    std::vector<C> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& p, const C& s) {
    if (s == 0) return Poly();
    std::vector<C> out(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = p.c_[i] * s;
    return Poly(std::move(out));
  }
  friend Poly operator*(const C& s, const Poly& p) { return p * s; }

  // p * t^k
  Poly shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative exponent");
    if (is_zero()) return Poly();
    std::vector<C> out(static_cast<std::size_t>(k), C(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
  }

  // Ascending coefficient list, e.g. "[16,12,2]"; "[]" for zero.
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += coeff_str(c_[i]);
    }
    out += ']';
    return out;
  }

 private:
  static std::string coeff_str(const Int& v) { return v.get_str(); }
  static std::string coeff_str(const Rat& v) { return v.get_str(); }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

// t^d * p(1/t): coefficient i of the result is coefficient d-i of p.
// Requires deg p <= d (vacuous for the zero polynomial).
template <class C>
Poly<C> reverse(const Poly<C>& p, int d) {
  if (d < 0) throw std::invalid_argument("reverse: negative degree bound");
  if (!p.is_zero() && p.degree() > d)
    throw std::invalid_argument("reverse: degree exceeds the reversal bound");
  std::vector<C> out(static_cast<std::size_t>(d) + 1, C(0));
  for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(d - i)] = p.coeff(i);
  return Poly<C>(std::move(out));
}

// p = reverse(p, d), i.e. the coefficient list is symmetric under i <-> d-i.
template <class C>
bool is_palindromic(const Poly<C>& p, int d) {
  return p == reverse(p, d);
}

RatPoly to_rational(const IntPoly& p);

// Succeeds iff every denominator is 1; otherwise throws consistency_error
// (a surviving denominator always signals a bug in this library).
IntPoly to_integer(const RatPoly& p);

// Divides every coefficient by s; throws consistency_error if any division
// is inexact.  Used where a recurrence guarantees exactness.
IntPoly exact_div(const IntPoly& p, const Int& s);

// a_i^2 >= a_{i-1} a_{i+1} at every interior index, and the support is an
// interval (no i < j < k with a_i, a_k != 0 but a_j = 0).  Length <= 2 is
// vacuously log-concave; the zero polynomial returns true by convention.
bool is_log_concave_no_internal_zeros(const IntPoly& p);

// B(p): coefficient i multiplied by binom(deg p, i).  Errors on zero.
IntPoly hadamard_normalize(const IntPoly& p);

// True iff every complex root of p is real, decided exactly: square-free
// reduction p/gcd(p, p') followed by a Sturm chain over the rationals,
// counting distinct real roots from sign variations at -inf and +inf.
// Errors on the zero polynomial.
bool sturm_real_rooted(const IntPoly& p);

RatPoly derivative(const RatPoly& p);

}  // namespace invkl
