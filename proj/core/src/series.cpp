#include "invkl/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace invkl {

USeries::USeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("USeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

USeries::USeries(int order, std::vector<RatPoly> coeffs) : order_(order) {
  if (order < 0) throw std::invalid_argument("USeries: negative order");
  if (coeffs.size() > static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("USeries: more coefficients than the order admits");
  c_ = std::move(coeffs);
  c_.resize(static_cast<std::size_t>(order) + 1);
}

USeries USeries::constant(RatPoly value, int order) {
  USeries s(order);
  s.c_[0] = std::move(value);
  return s;
}

USeries USeries::monomial(RatPoly value, int k, int order) {
  USeries s(order);
  if (k < 0) throw std::invalid_argument("USeries::monomial: negative power");
  if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(value);
  return s;
}

const RatPoly& USeries::coeff(int k) const {
  if (k < 0 || k > order_) throw std::invalid_argument("USeries::coeff: index beyond order");
  return c_[static_cast<std::size_t>(k)];
}

void USeries::set_coeff(int k, RatPoly v) {
  if (k < 0 || k > order_) throw std::invalid_argument("USeries::set_coeff: index beyond order");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

namespace {
void require_equal_orders(const USeries& a, const USeries& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
}
}  // namespace

USeries USeries::operator+(const USeries& o) const {
  require_equal_orders(*this, o, "USeries::operator+");
  USeries out(order_);
  for (int k = 0; k <= order_; ++k) out.c_[k] = c_[k] + o.c_[k];
  return out;
}

USeries USeries::operator-(const USeries& o) const {
  require_equal_orders(*this, o, "USeries::operator-");
  USeries out(order_);
  for (int k = 0; k <= order_; ++k) out.c_[k] = c_[k] - o.c_[k];
  return out;
}

USeries USeries::operator*(const USeries& o) const {
  require_equal_orders(*this, o, "USeries::operator*");
  USeries out(order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (o.c_[j].is_zero()) continue;
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return out;
}

USeries USeries::scaled(const RatPoly& s) const {
  USeries out(order_);
  for (int k = 0; k <= order_; ++k) out.c_[k] = c_[k] * s;
  return out;
}

USeries series_inverse(const USeries& s) {
  const RatPoly& a0 = s.coeff(0);
  if (a0.is_zero() || a0.degree() != 0)
    throw std::invalid_argument(
        "series_inverse: constant coefficient must be a nonzero rational constant");
  const Rat inv_a0 = Rat(1) / a0.coeffs()[0];
  USeries out(s.order());
  out.set_coeff(0, RatPoly::constant(inv_a0));
  for (int n = 1; n <= s.order(); ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (s.coeff(k).is_zero()) continue;
      acc += s.coeff(k) * out.coeff(n - k);
    }
    out.set_coeff(n, acc * (-inv_a0));
  }
  return out;
}

USeries sqrt_one_minus_4tu2(int order) {
  USeries out(order);
  out.set_coeff(0, RatPoly::constant(Rat(1)));
  for (int i = 1; 2 * i <= order; ++i)
    out.set_coeff(2 * i, RatPoly::monomial(Rat(-2) * Rat(catalan(i - 1)), i));
  return out;
}

namespace {

// (1 - 4u + sqrt(1 - 4tu^2)) / 2 = 1 - 2u - sum_{i>=1} C_{i-1} t^i u^{2i}
USeries q_factor(int order) {
  USeries a = sqrt_one_minus_4tu2(order) + USeries::constant(RatPoly::constant(Rat(1)), order) -
              USeries::monomial(RatPoly::constant(Rat(4)), 1, order);
  return a.scaled(RatPoly::constant(Rat(1, 2)));
}

std::vector<IntPoly> solve_forward(const USeries& factor, const USeries& rhs,
                                   bool unknown_starts_at_one) {
  // Solve (sum_n X_n u^n) * factor = rhs for X, where factor has constant
  // coefficient 1; when unknown_starts_at_one the sum starts at n = 1 and
  // X_0 is fixed to 1 separately.
  const int n_max = factor.order();
  if (factor.coeff(0) != RatPoly::constant(Rat(1)))
    throw consistency_error("solve_forward: factor must have constant coefficient 1");
  std::vector<RatPoly> x(static_cast<std::size_t>(n_max) + 1);
  const int first = unknown_starts_at_one ? 1 : 0;
  if (unknown_starts_at_one) x[0] = RatPoly::constant(Rat(1));
  for (int n = first; n <= n_max; ++n) {
    RatPoly acc = rhs.coeff(n);
    for (int k = first; k < n; ++k) {
      if (factor.coeff(n - k).is_zero()) continue;
      acc -= x[k] * factor.coeff(n - k);
    }
    x[n] = std::move(acc);
  }
  std::vector<IntPoly> out;
  out.reserve(x.size());
  for (const RatPoly& p : x) out.push_back(to_integer(p));
  return out;
}

}  // namespace

std::vector<IntPoly> q_fan_from_gf(int n_max) {
  if (n_max < 0) throw std::invalid_argument("q_fan_from_gf: negative n_max");
  if (n_max == 0) return {IntPoly::constant(Int(1))};
  return solve_forward(q_factor(n_max), USeries::monomial(RatPoly::constant(Rat(1)), 1, n_max),
                       /*unknown_starts_at_one=*/true);
}

std::vector<IntPoly> y_fan_from_gf(int n_max) {
  if (n_max < 0) throw std::invalid_argument("y_fan_from_gf: negative n_max");
  const RatPoly one_plus_t(std::vector<Rat>{Rat(1), Rat(1)});
  if (n_max == 0) return {IntPoly::constant(Int(1))};
  // 1 - 2(t+1)u + sum_{j>=0} C_j t^{j+1} u^{2j+2} = (3 - 4(t+1)u - sqrt(1-4tu^2)) / 2
  USeries b = (USeries::constant(RatPoly::constant(Rat(3)), n_max) - sqrt_one_minus_4tu2(n_max))
                  .scaled(RatPoly::constant(Rat(1, 2))) -
              USeries::monomial(one_plus_t * Rat(2), 1, n_max);
  USeries rhs = USeries::constant(RatPoly::constant(Rat(1)), n_max) -
                USeries::monomial(one_plus_t, 1, n_max);
  return solve_forward(b, rhs, /*unknown_starts_at_one=*/false);
}

}  // namespace invkl
