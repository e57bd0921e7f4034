#pragma once

#include <string>
#include <vector>

#include "invkl/poly.hpp"

namespace invkl {

// Enumeration cap for the weight-sum structures; |C'_10| = 28657 and each
// weight is a polynomial product, which is the comfort limit.
inline constexpr int kCPrimeCap = 10;

// Q_{F_n}(t) = sum_{k=0}^{floor((n-1)/2)} (n-2k) 2^{n-2k-1} binom(n,k)/n * t^k
// for n >= 1; Q_{F_0} = 1 by the rank-0 convention.  The rational prefactor
// always clears: integrality is asserted, not assumed.
IntPoly q_fan_closed(int n);

// Q_{F_0..F_n_max} from the four-term recurrence
//   4nt(t+4) Q_n - 8nt Q_{n+1} - (n+3)(t+4) Q_{n+2} + 2(n+3) Q_{n+3} = 0
// with seeds 1, 1, 2; the division by 2(n+3) must be exact.
std::vector<IntPoly> q_fan_recurrence(int n_max);

// Q_{F_0..F_n_max} from the deletion recurrence
//   Q_n = (t+2) Q_{n-1} - sum_{j=0}^{floor((n-2)/2)} C_j t^{j+1} Q_{n-2j-2},
// seeds Q_0 = Q_1 = 1.
std::vector<IntPoly> q_fan_deletion(int n_max);

// Y_{F_0..F_n_max} from the deletion recurrence
//   Y_n = 2(t+1) Y_{n-1} - sum_{j=0}^{floor((n-2)/2)} C_j t^{j+1} Y_{n-2j-2},
// seeds Y_0 = 1, Y_1 = 1+t.
std::vector<IntPoly> y_fan_deletion(int n_max);

// Y_{F_n}(t) via the closed form: coefficient of t^k is
// sum_j b_{n,j} binom(n-2j, k-j) with the b-row below.  Termwise genuinely
// fractional; the final coefficients must be integers (asserted).
IntPoly y_fan_closed(int n);

// The palindromic-expansion coefficients b_{n,0..floor(n/2)} defined by
// Y_{F_n} = sum_j b_{n,j} t^j (1+t)^{n-2j}, computed directly:
//   b_{n,j} = (-2)^j / 2^{n+2} * sum_{i=0}^{n-1} 3^{n-1-i} binom(n-1,i)
//             [binom((i-1)/2, j) + 3 binom((i+1)/2, j) + 4 binom(i/2, j)].
// Each b_{n,j} is an integer (unitriangular change of basis from an integer
// polynomial); integrality is asserted.  Requires n >= 1.
std::vector<Int> b_coefficients(int n);

// sum_j b_{n,j} t^j (1+t)^{n-2j}, assembled by polynomial arithmetic.  An
// independent reconstruction route used to cross-check y_fan_closed.
IntPoly b_expansion_reconstruct(int n);

// tau(F_r): the Catalan number C_{(r-1)/2} for odd r, 0 for even r.
Int tau_fan(int r);

/* One structure A = (A_1, A_2, ..., A_{2k}) in C'_n: odd positions hold a
 * single nonnegative integer a_{2i-1}, even positions hold a composition of
 * a_{2i} into positive parts (empty iff a_{2i} = 0).  Interior entries of
 * the flattened sequence (a_1, ..., a_{2k}) are >= 1; only a_1 and a_{2k}
 * may vanish.  Total sum is n. */
class CPrimeStructure {
 public:
  // odd[i] = a_{2i+1}; even[i] = the composition making up a_{2i+2}.
  CPrimeStructure(std::vector<int> odd, std::vector<std::vector<int>> even);

  int pairs() const { return static_cast<int>(odd_.size()); }  // k
  int total() const;                                           // n
  const std::vector<int>& odd_entries() const { return odd_; }
  const std::vector<std::vector<int>>& even_compositions() const { return even_; }

  // e.g. "((0),(1,1))" or "((0),(1),(1),())" -- the flattened 2k-tuple.
  std::string str() const;

  bool operator==(const CPrimeStructure&) const = default;

 private:
  std::vector<int> odd_;
  std::vector<std::vector<int>> even_;
};

// Complete duplicate-free enumeration of C'_n in a fixed lexicographic
// order (by number of pairs, then by the underlying weak composition, then
// by the expansion of the even positions).  n = 0 yields the single
// structure ((0),()) coming from the weak composition (0,0).
std::vector<CPrimeStructure> cprime_structures(int n, int cap = kCPrimeCap);

// w(A) = prod_i (-1)^{l_i} t^{l_i+1} Q_{F_{a_{2i-1}}}(t) chi_{F_{l_i}}(1/t),
// l_i the length of the i-th even composition.  Each factor's Laurent part
// t^{l+1} chi_{F_l}(1/t) equals reverse(chi_{F_l}, l+1) with the convention
// chi_{F_0}(t) = t, so the weight is a genuine polynomial.
// Summed over C'_n it gives t^n Q_{F_n}(1/t).
IntPoly weight_w(const CPrimeStructure& a);

// w~(A) = prod_i 2^{l_i - 1} t^{l_i} Q_{F_{a_{2i-1}}}(t), with factor 1 for
// l_i = 0 (the empty composition contributes 1).  Summed over C'_n it gives
// Y_{F_n}(t).
IntPoly weight_w_tilde(const CPrimeStructure& a);

// Checks a_{n,k} + 4 a_{n,k+1} = 2 a_{n+1,k+1} for 1 <= n <= n_max over
// all k, with a_{n,k} = (n-2k) 2^{n-2k-1} binom(n,k)/n extended by zero for
// k < 0 or n < 2k+1.  Instances with n = 2k+1 are skipped: there the zero
// convention clips a genuinely nonzero formula value on the left while the
// right side vanishes, so the identity is not claimed.
bool a_identity_check(int n_max);

}  // namespace invkl
