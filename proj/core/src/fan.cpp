#include "invkl/fan.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "invkl/errors.hpp"

namespace invkl {

IntPoly q_fan_closed(int n) {
  if (n < 0) throw std::invalid_argument("q_fan_closed: negative index");
  if (n == 0) return IntPoly::constant(Int(1));  // rank-0 convention
  std::vector<Int> c(static_cast<std::size_t>((n - 1) / 2) + 1);
  for (int k = 0; 2 * k + 1 <= n; ++k) {
    // (n-2k) 2^{n-2k-1} binom(n,k) / n -- the division is always exact
    Rat v(Int(n - 2 * k) * pow2(static_cast<unsigned long>(n - 2 * k - 1)) *
              binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
          Int(n));
    v.canonicalize();
    if (v.get_den() != 1)
      throw consistency_error("q_fan_closed: non-integral coefficient at n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    c[static_cast<std::size_t>(k)] = v.get_num();
  }
  return IntPoly(std::move(c));
}

std::vector<IntPoly> q_fan_recurrence(int n_max) {
  if (n_max < 0) throw std::invalid_argument("q_fan_recurrence: negative n_max");
  std::vector<IntPoly> q{IntPoly::constant(Int(1)), IntPoly::constant(Int(1)),
                         IntPoly::constant(Int(2))};
  const IntPoly t_plus_4(std::vector<Int>{Int(4), Int(1)});
  const IntPoly t = IntPoly::monomial(Int(1), 1);
  for (int n = 0; n + 3 <= n_max; ++n) {
    // 2(n+3) Q_{n+3} = (n+3)(t+4) Q_{n+2} + 8nt Q_{n+1} - 4nt(t+4) Q_n
    IntPoly rhs = t_plus_4 * q[static_cast<std::size_t>(n + 2)] * Int(n + 3) +
                  t * q[static_cast<std::size_t>(n + 1)] * Int(8 * n) -
                  t * t_plus_4 * q[static_cast<std::size_t>(n)] * Int(4 * n);
    q.push_back(exact_div(rhs, Int(2 * (n + 3))));
  }
  q.resize(static_cast<std::size_t>(n_max) + 1);
  return q;
}

std::vector<IntPoly> q_fan_deletion(int n_max) {
  if (n_max < 0) throw std::invalid_argument("q_fan_deletion: negative n_max");
  std::vector<IntPoly> q{IntPoly::constant(Int(1)), IntPoly::constant(Int(1))};
  const IntPoly t_plus_2(std::vector<Int>{Int(2), Int(1)});
  for (int n = 2; n <= n_max; ++n) {
    IntPoly acc = t_plus_2 * q[static_cast<std::size_t>(n - 1)];
    for (int j = 0; 2 * j <= n - 2; ++j)
      acc -= (q[static_cast<std::size_t>(n - 2 * j - 2)] * catalan(static_cast<unsigned long>(j)))
                 .shifted(j + 1);
    q.push_back(std::move(acc));
  }
  q.resize(static_cast<std::size_t>(n_max) + 1);
  return q;
}

std::vector<IntPoly> y_fan_deletion(int n_max) {
  if (n_max < 0) throw std::invalid_argument("y_fan_deletion: negative n_max");
  std::vector<IntPoly> y{IntPoly::constant(Int(1)),
                         IntPoly(std::vector<Int>{Int(1), Int(1)})};
  const IntPoly two_t_plus_2(std::vector<Int>{Int(2), Int(2)});
  for (int n = 2; n <= n_max; ++n) {
    IntPoly acc = two_t_plus_2 * y[static_cast<std::size_t>(n - 1)];
    for (int j = 0; 2 * j <= n - 2; ++j)
      acc -= (y[static_cast<std::size_t>(n - 2 * j - 2)] * catalan(static_cast<unsigned long>(j)))
                 .shifted(j + 1);
    y.push_back(std::move(acc));
  }
  y.resize(static_cast<std::size_t>(n_max) + 1);
  return y;
}

namespace {

/* The b-row of the palindromic expansion, kept rational until the caller
 * decides where to assert integrality.  The three generalized binomials
 * binom((i-1)/2, j), binom((i+1)/2, j), binom(i/2, j) are updated
 * incrementally in j via gb(x, j) = gb(x, j-1) (x-j+1)/j, which turns the
 * naive O(n^3) evaluation into O(n^2) rational operations. */
std::vector<Rat> b_row_rational(int n) {
  if (n < 1) throw std::invalid_argument("b_coefficients: index must be >= 1");
  const std::size_t rows = static_cast<std::size_t>(n);
  std::vector<Rat> gb_minus(rows, Rat(1)), gb_plus(rows, Rat(1)), gb_half(rows, Rat(1));
  std::vector<Int> weight(rows);  // 3^{n-1-i} binom(n-1, i)
  for (int i = 0; i < n; ++i) {
    Int p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n - 1 - i));
    weight[static_cast<std::size_t>(i)] =
        p3 * binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(i));
  }
  Rat prefactor(1, pow2(static_cast<unsigned long>(n) + 2));
  prefactor.canonicalize();
  std::vector<Rat> b(static_cast<std::size_t>(n / 2) + 1);
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      const Rat step_den(static_cast<long>(j));
      for (int i = 0; i < n; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        Rat xm(i - 1, 2), xp(i + 1, 2), xh(i, 2);
        xm.canonicalize();
        xp.canonicalize();
        xh.canonicalize();
        const Rat jm1(static_cast<long>(j) - 1);
        gb_minus[ii] *= (xm - jm1) / step_den;
        gb_plus[ii] *= (xp - jm1) / step_den;
        gb_half[ii] *= (xh - jm1) / step_den;
      }
      prefactor *= Rat(-2);
    }
    Rat sum(0);
    for (int i = 0; i < n; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      sum += Rat(weight[ii]) * (gb_minus[ii] + Rat(3) * gb_plus[ii] + Rat(4) * gb_half[ii]);
    }
    b[static_cast<std::size_t>(j)] = prefactor * sum;
  }
  return b;
}

// chi_{F_l}(t) = t(t-1)(t-2)^{l-1} for l >= 1, with the convention
// chi_{F_0}(t) = t that makes the weight factors uniform.
IntPoly fan_chromatic(int l) {
  IntPoly chi = IntPoly::monomial(Int(1), 1);
  if (l == 0) return chi;
  const IntPoly t_minus_1(std::vector<Int>{Int(-1), Int(1)});
  const IntPoly t_minus_2(std::vector<Int>{Int(-2), Int(1)});
  chi *= t_minus_1;
  for (int i = 1; i < l; ++i) chi *= t_minus_2;
  return chi;
}

}  // namespace

IntPoly y_fan_closed(int n) {
  if (n < 0) throw std::invalid_argument("y_fan_closed: negative index");
  if (n == 0) return IntPoly::constant(Int(1));
  const std::vector<Rat> b = b_row_rational(n);
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rat sum(0);
    for (int j = 0; 2 * j <= n && j <= k; ++j)
      sum += b[static_cast<std::size_t>(j)] *
             Rat(binomial(static_cast<unsigned long>(n - 2 * j), static_cast<unsigned long>(k - j)));
    c[static_cast<std::size_t>(k)] = std::move(sum);
  }
  return to_integer(RatPoly(std::move(c)));
}

std::vector<Int> b_coefficients(int n) {
  const std::vector<Rat> b = b_row_rational(n);
  std::vector<Int> out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j].get_den() != 1)
      throw consistency_error("b_coefficients: b_{" + std::to_string(n) + "," + std::to_string(j) +
                              "} = " + b[j].get_str() + " is not an integer");
    out[j] = b[j].get_num();
  }
  return out;
}

IntPoly b_expansion_reconstruct(int n) {
  const std::vector<Int> b = b_coefficients(n);
  const IntPoly one_plus_t(std::vector<Int>{Int(1), Int(1)});
  IntPoly acc;
  for (std::size_t j = 0; j < b.size(); ++j) {
    IntPoly term = IntPoly::constant(b[j]);
    for (int i = 0; i < n - 2 * static_cast<int>(j); ++i) term *= one_plus_t;
    acc += term.shifted(static_cast<int>(j));
  }
  return acc;
}

Int tau_fan(int r) {
  if (r < 0) throw std::invalid_argument("tau_fan: negative rank");
  if (r % 2 == 0) return Int(0);
  return catalan(static_cast<unsigned long>((r - 1) / 2));
}

CPrimeStructure::CPrimeStructure(std::vector<int> odd, std::vector<std::vector<int>> even)
    : odd_(std::move(odd)), even_(std::move(even)) {
  if (odd_.empty() || odd_.size() != even_.size())
    throw std::invalid_argument("CPrimeStructure: need k >= 1 aligned odd/even entries");
  const std::size_t k = odd_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (odd_[i] < 0) throw std::invalid_argument("CPrimeStructure: negative entry");
    if (i > 0 && odd_[i] == 0)
      throw std::invalid_argument("CPrimeStructure: interior odd entry must be positive");
    for (int part : even_[i])
      if (part < 1) throw std::invalid_argument("CPrimeStructure: composition parts must be positive");
    if (i + 1 < k && even_[i].empty())
      throw std::invalid_argument("CPrimeStructure: interior even entry must be positive");
  }
}

int CPrimeStructure::total() const {
  int n = 0;
  for (int a : odd_) n += a;
  for (const auto& comp : even_)
    for (int part : comp) n += part;
  return n;
}

std::string CPrimeStructure::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < odd_.size(); ++i) {
    if (i) out += ',';
    out += '(' + std::to_string(odd_[i]) + "),(";
    for (std::size_t p = 0; p < even_[i].size(); ++p) {
      if (p) out += ',';
      out += std::to_string(even_[i][p]);
    }
    out += ')';
  }
  out += ')';
  return out;
}

namespace {

// Compositions of m into positive parts, lexicographic.  S_0 = {()}.
std::vector<std::vector<int>> positive_compositions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= left; ++first) {
      cur.push_back(first);
      self(self, left - first);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

}  // namespace

std::vector<CPrimeStructure> cprime_structures(int n, int cap) {
  if (n < 0) throw std::invalid_argument("cprime_structures: negative index");
  if (n > cap)
    throw cap_error("cprime_structures needs n <= " + std::to_string(cap) + ", got " +
                    std::to_string(n));
  std::vector<CPrimeStructure> out;
  // Weak compositions (a_1, ..., a_{2k}) of n with interior entries >= 1,
  // enumerated by k and then lexicographically; each even position a_{2i}
  // is expanded into every composition of it with positive parts.
  for (int k = 1; 2 * (k - 1) <= n; ++k) {
    std::vector<int> a(static_cast<std::size_t>(2 * k));
    auto expand = [&]() {
      std::vector<std::vector<std::vector<int>>> choices(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        choices[static_cast<std::size_t>(i)] = positive_compositions(a[static_cast<std::size_t>(2 * i + 1)]);
      // odometer over the k composition choices
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      while (true) {
        std::vector<int> odd(static_cast<std::size_t>(k));
        std::vector<std::vector<int>> even(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          odd[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(2 * i)];
          even[static_cast<std::size_t>(i)] =
              choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        }
        out.emplace_back(std::move(odd), std::move(even));
        int pos = k - 1;
        while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] ==
                               choices[static_cast<std::size_t>(pos)].size()) {
          pick[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    };
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == a.size()) {
        a[pos] = left;  // boundary entry, may be 0
        expand();
        return;
      }
      const int lo = (pos == 0) ? 0 : 1;  // interior entries are positive
      for (int v = lo; v <= left; ++v) {
        a[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, n);
  }
  return out;
}

IntPoly weight_w(const CPrimeStructure& a) {
  IntPoly out = IntPoly::constant(Int(1));
  for (int i = 0; i < a.pairs(); ++i) {
    const int l = static_cast<int>(a.even_compositions()[static_cast<std::size_t>(i)].size());
    IntPoly factor = q_fan_closed(a.odd_entries()[static_cast<std::size_t>(i)]) *
                     reverse(fan_chromatic(l), l + 1);
    if (l % 2 == 1) factor = -factor;
    out *= factor;
  }
  return out;
}

IntPoly weight_w_tilde(const CPrimeStructure& a) {
  IntPoly out = IntPoly::constant(Int(1));
  for (int i = 0; i < a.pairs(); ++i) {
    const int l = static_cast<int>(a.even_compositions()[static_cast<std::size_t>(i)].size());
    IntPoly factor = q_fan_closed(a.odd_entries()[static_cast<std::size_t>(i)]);
    if (l > 0)
      factor = (factor * pow2(static_cast<unsigned long>(l - 1))).shifted(l);
    out *= factor;
  }
  return out;
}

namespace {

// (n-2k) 2^{n-2k-1} binom(n,k) / n with the zero conventions: 0 for k < 0
// or n < 2k+1.  Rational because the identity is checked before clearing.
Rat a_value(int n, int k) {
  if (k < 0 || n < 2 * k + 1) return Rat(0);
  Rat v(Int(n - 2 * k) * pow2(static_cast<unsigned long>(n - 2 * k - 1)) *
            binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
        Int(n));
  v.canonicalize();
  return v;
}

}  // namespace

bool a_identity_check(int n_max) {
  if (n_max < 1) throw std::invalid_argument("a_identity_check: n_max must be >= 1");
  for (int n = 1; n <= n_max; ++n) {
    for (int k = -1; 2 * k <= n + 2; ++k) {
      if (n == 2 * k + 1) continue;  // boundary where the zero convention clips a nonzero value
      if (a_value(n, k) + Rat(4) * a_value(n, k + 1) != Rat(2) * a_value(n + 1, k + 1))
        return false;
    }
  }
  return true;
}

}  // namespace invkl
