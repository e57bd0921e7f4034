#include "invkl/poly.hpp"

#include <cstddef>
#include <vector>

namespace invkl {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rat> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rat(p.coeffs()[i]);
  return RatPoly(std::move(out));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Int> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rat& c = p.coeffs()[i];
    if (c.get_den() != 1)
      throw consistency_error("non-integral coefficient " + c.get_str() +
                              " where an integer was required");
    out[i] = c.get_num();
  }
  return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& p, const Int& s) {
  if (s == 0) throw std::invalid_argument("exact_div: division by zero");
  std::vector<Int> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Int& c = p.coeffs()[i];
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
      throw consistency_error("exact_div: " + c.get_str() + " not divisible by " + s.get_str());
    mpz_divexact(out[i].get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

bool is_log_concave_no_internal_zeros(const IntPoly& p) {
  const auto& a = p.coeffs();
  if (a.size() <= 2) return true;  // vacuous: no interior index, no room for a gap
  // support must be an interval: after the first nonzero entry, no zeros
  // (the last entry is nonzero by the trimming invariant)
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == 0) ++lo;
  for (std::size_t i = lo; i < a.size(); ++i)
    if (a[i] == 0) return false;
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  return true;
}

IntPoly hadamard_normalize(const IntPoly& p) {
  if (p.is_zero())
    throw std::domain_error("hadamard_normalize: zero polynomial has no degree");
  const auto s = static_cast<unsigned long>(p.degree());
  std::vector<Int> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = p.coeffs()[i] * binomial(s, static_cast<unsigned long>(i));
  return IntPoly(std::move(out));
}

RatPoly derivative(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return RatPoly();
  std::vector<Rat> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = p.coeffs()[i + 1] * Rat(static_cast<long>(i) + 1);
  return RatPoly(std::move(out));
}

namespace {

// Euclidean remainder of a by b over the rationals (b nonzero).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  const int db = b.degree();
  const Rat lead_b = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= db) {
    const Rat q = a.coeffs().back() / lead_b;
    a -= (b * q).shifted(a.degree() - db);
  }
  return a;
}

// Exact quotient of a by b; the remainder is known to vanish.
RatPoly poly_div_exact(RatPoly a, const RatPoly& b) {
  const int db = b.degree();
  const Rat lead_b = b.coeffs().back();
  std::vector<Rat> q(a.is_zero() ? 0 : static_cast<std::size_t>(a.degree() - db) + 1);
  while (!a.is_zero() && a.degree() >= db) {
    const Rat c = a.coeffs().back() / lead_b;
    q[static_cast<std::size_t>(a.degree() - db)] = c;
    a -= (b * c).shifted(a.degree() - db);
  }
  if (!a.is_zero()) throw consistency_error("poly_div_exact: nonzero remainder");
  return RatPoly(std::move(q));
}

// Scale by a positive rational so the coefficients become coprime integers.
// Positive scaling preserves every sign seen by the Sturm chain.
RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int content = 0;
  for (const Rat& c : p.coeffs()) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor(den_lcm, content);  // positive: lcm > 0, gcd > 0
  factor.canonicalize();
  return p * factor;
}

// Monic gcd over the rationals.
RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.coeffs().back());
}

int sign_variations(const std::vector<int>& signs) {
  int var = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

bool sturm_real_rooted(const IntPoly& p) {
  if (p.is_zero())
    throw std::domain_error("sturm_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;  // no roots at all

  const RatPoly f = to_rational(p);
  const RatPoly g = poly_gcd(f, derivative(f));
  const RatPoly sf = g.is_zero() ? f : poly_div_exact(f, g);  // square-free part
  const int target = sf.degree();
  if (target == 0) return true;

  // Sturm chain: s0 = sf, s1 = sf', s_{i+1} = -rem(s_{i-1}, s_i).
  std::vector<RatPoly> chain{primitive_part(sf), primitive_part(derivative(sf))};
  while (!chain.back().is_zero()) {
    RatPoly r = -poly_rem(chain[chain.size() - 2], chain.back());
    chain.push_back(primitive_part(r));
  }
  chain.pop_back();  // drop the final zero

  std::vector<int> at_pos, at_neg;
  at_pos.reserve(chain.size());
  at_neg.reserve(chain.size());
  for (const RatPoly& s : chain) {
    const int lead = sgn(s.coeffs().back());
    at_pos.push_back(lead);
    at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  // distinct real roots on (-inf, +inf) = V(-inf) - V(+inf)
  const int real_roots = sign_variations(at_neg) - sign_variations(at_pos);
  return real_roots == target;
}

}  // namespace invkl
