#pragma once

// Reference values computed by an independent implementation (straight
// transcription of the defining recursion and the closed forms in exact
// big-integer arithmetic) and frozen here.  The tests compare the library
// against these, never against itself.

#include <vector>

#include "invkl/poly.hpp"

namespace frozen {

inline invkl::IntPoly ip(const std::vector<long>& v) {
  return invkl::IntPoly(std::vector<invkl::Int>(v.begin(), v.end()));
}

// Q_{F_0} .. Q_{F_10}
inline std::vector<invkl::IntPoly> q_fans() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1},
      {2},
      {4, 1},
      {8, 4},
      {16, 12, 2},
      {32, 32, 10},
      {64, 80, 36, 5},
      {128, 192, 112, 28},
      {256, 448, 320, 112, 14},
      {512, 1024, 864, 384, 84},
  };
  std::vector<invkl::IntPoly> out;
  for (const auto& r : rows) out.push_back(ip(r));
  return out;
}

// Y_{F_0} .. Y_{F_8}
inline std::vector<invkl::IntPoly> y_fans() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1, 1},
      {2, 3, 2},
      {4, 9, 9, 4},
      {8, 24, 32, 24, 8},
      {16, 60, 102, 102, 60, 16},
      {32, 144, 298, 371, 298, 144, 32},
      {64, 336, 820, 1225, 1225, 820, 336, 64},
      {128, 768, 2160, 3764, 4486, 3764, 2160, 768, 128},
  };
  std::vector<invkl::IntPoly> out;
  for (const auto& r : rows) out.push_back(ip(r));
  return out;
}

// b_{n,j} rows for n = 1..8 (index 0 unused).
inline std::vector<std::vector<long>> b_rows() {
  return {
      {},
      {1},
      {2, -1},
      {4, -3},
      {8, -8, 0},
      {16, -20, 2},
      {32, -48, 10, -1},
      {64, -112, 36, -3},
      {128, -256, 112, -12, -2},
  };
}

// |C'_n| for n = 0..7 (the odd-indexed Fibonacci bisection).
inline std::vector<long> cprime_counts() { return {1, 2, 5, 13, 34, 89, 233, 610}; }

}  // namespace frozen
