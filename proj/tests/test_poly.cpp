#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "invkl/errors.hpp"
#include "invkl/numeric.hpp"
#include "invkl/poly.hpp"

#include "frozen_values.hpp"

using frozen::ip;
using invkl::Int;
using invkl::IntPoly;
using invkl::Rat;
using invkl::RatPoly;

TEST_CASE("construction trims trailing zeros to a canonical form") {
  CHECK(ip({1, 0}) == ip({1}));
  CHECK(ip({0, 0, 0}) == IntPoly());
  CHECK(IntPoly().is_zero());
  CHECK(!ip({0, 1}).is_zero());
  CHECK(IntPoly::constant(Int(7)) == ip({7}));
  CHECK(IntPoly::monomial(Int(3), 2) == ip({0, 0, 3}));
  CHECK_THROWS_AS(IntPoly::monomial(Int(1), -1), std::invalid_argument);
}

TEST_CASE("degree and coefficient access") {
  const IntPoly p = ip({4, 1});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 4);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(-1) == 0);
  CHECK_THROWS_AS(IntPoly().degree(), std::domain_error);
}

TEST_CASE("ring operations") {
  const IntPoly one_plus_t = ip({1, 1});
  CHECK(one_plus_t * one_plus_t == ip({1, 2, 1}));
  CHECK(ip({3, 5}) * IntPoly() == IntPoly());
  CHECK((ip({4, 1}) + ip({8, 4})).shifted(1) == ip({0, 12, 5}));
  CHECK(ip({1, 2}) - ip({1, 1}) == ip({0, 1}));
  CHECK(ip({1, 1}) - ip({1, 1}) == IntPoly());
  CHECK(-ip({1, -2}) == ip({-1, 2}));
  CHECK(ip({1, 1}) * Int(3) == ip({3, 3}));
  CHECK(Int(0) * ip({1, 1}) == IntPoly());
  CHECK_THROWS_AS(ip({1}).shifted(-2), std::invalid_argument);

  IntPoly acc = ip({1});
  acc += ip({0, 1});
  acc *= ip({1, 1});
  CHECK(acc == ip({1, 2, 1}));
  acc -= ip({1, 2, 1});
  CHECK(acc.is_zero());
}

TEST_CASE("degrees compose under multiplication") {
  const IntPoly a = ip({1, 0, 2});
  const IntPoly b = ip({-3, 1});
  CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("reverse reflects coefficients across the degree bound") {
  CHECK(invkl::reverse(ip({2}), 2) == ip({0, 0, 2}));
  CHECK(invkl::reverse(ip({4, 1}), 3) == ip({0, 0, 1, 4}));
  CHECK(invkl::reverse(ip({16, 12, 2}), 5) == ip({0, 0, 0, 2, 12, 16}));
  CHECK(invkl::reverse(IntPoly(), 3) == IntPoly());
  CHECK_THROWS_AS(invkl::reverse(ip({1, 1, 1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(invkl::reverse(ip({1}), -1), std::invalid_argument);

  // involution on everything within the bound
  for (const IntPoly& p : {ip({4, 1}), ip({0, 7, 0, 3}), ip({5})})
    CHECK(invkl::reverse(invkl::reverse(p, 4), 4) == p);
}

TEST_CASE("palindromicity") {
  CHECK(invkl::is_palindromic(ip({2, 3, 2}), 2));
  CHECK(invkl::is_palindromic(ip({1}), 0));
  CHECK(!invkl::is_palindromic(ip({4, 1}), 1));
}

TEST_CASE("palindromicity respects the stated degree, not the support") {
  CHECK(invkl::is_palindromic(ip({0, 1, 1, 0}), 4) == false);
  CHECK(invkl::is_palindromic(ip({0, 1, 0, 1}), 4));
}

TEST_CASE("rational/integer conversion") {
  const IntPoly p = ip({4, 1});
  CHECK(invkl::to_integer(invkl::to_rational(p)) == p);
  RatPoly half(std::vector<Rat>{Rat(1, 2)});
  CHECK_THROWS_AS(invkl::to_integer(half), invkl::consistency_error);
}

TEST_CASE("exact division by a scalar") {
  CHECK(invkl::exact_div(ip({4, 2}), Int(2)) == ip({2, 1}));
  CHECK(invkl::exact_div(IntPoly(), Int(5)) == IntPoly());
  CHECK_THROWS_AS(invkl::exact_div(ip({3}), Int(2)), invkl::consistency_error);
}

TEST_CASE("log-concavity with interval support") {
  CHECK(invkl::is_log_concave_no_internal_zeros(ip({16, 12, 2})));
  CHECK(!invkl::is_log_concave_no_internal_zeros(ip({1, 0, 1})));
  CHECK(invkl::is_log_concave_no_internal_zeros(ip({1, 3, 1})));
  // length <= 2 is vacuous
  CHECK(invkl::is_log_concave_no_internal_zeros(IntPoly()));
  CHECK(invkl::is_log_concave_no_internal_zeros(ip({5})));
  CHECK(invkl::is_log_concave_no_internal_zeros(ip({9, 1})));
  // leading zeros are not internal
  CHECK(invkl::is_log_concave_no_internal_zeros(ip({0, 0, 1, 1})));
  CHECK(!invkl::is_log_concave_no_internal_zeros(ip({0, 1, 0, 0, 1})));
  // log-concavity violation without any zero
  CHECK(!invkl::is_log_concave_no_internal_zeros(ip({4, 1, 4})));
}

TEST_CASE("hadamard normalization") {
  CHECK(invkl::hadamard_normalize(ip({16, 12, 2})) == ip({16, 24, 2}));
  CHECK(invkl::hadamard_normalize(ip({7})) == ip({7}));
  CHECK(invkl::hadamard_normalize(ip({4, 1})) == ip({4, 1}));
  CHECK(invkl::hadamard_normalize(ip({1, 3, 3, 1})) == ip({1, 9, 9, 1}));
  CHECK_THROWS_AS(invkl::hadamard_normalize(IntPoly()), std::domain_error);
}

TEST_CASE("sturm real-rootedness: exact verdicts") {
  CHECK(invkl::sturm_real_rooted(ip({1, 2, 1})));      // (1+t)^2, repeated root
  CHECK(!invkl::sturm_real_rooted(ip({1, 0, 1})));     // roots +-i
  CHECK(invkl::sturm_real_rooted(ip({16, 24, 2})));    // B(Q_{F_5})
  CHECK(invkl::sturm_real_rooted(ip({1, 3, 3, 1})));   // (1+t)^3
  CHECK(!invkl::sturm_real_rooted(ip({1, 1, 1})));     // cyclotomic
  CHECK(invkl::sturm_real_rooted(ip({5})));            // constants have no roots
  CHECK(invkl::sturm_real_rooted(ip({2, 3})));
  CHECK(invkl::sturm_real_rooted(ip({0, 0, 1})));      // t^2
  CHECK(invkl::sturm_real_rooted(ip({-6, 11, -6, 1})));   // (t-1)(t-2)(t-3)
  CHECK(!invkl::sturm_real_rooted(ip({1, 1, 1, 1, 1})));  // cyclotomic, degree 4
  CHECK_THROWS_AS(invkl::sturm_real_rooted(IntPoly()), std::domain_error);
}

TEST_CASE("derivative") {
  RatPoly p(std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(invkl::derivative(p) == RatPoly(std::vector<Rat>{Rat(2), Rat(6)}));
  CHECK(invkl::derivative(RatPoly(std::vector<Rat>{Rat(4)})) == RatPoly());
}

TEST_CASE("textual form") {
  CHECK(ip({16, 12, 2}).str() == "[16,12,2]");
  CHECK(ip({-1, 1}).str() == "[-1,1]");
  CHECK(IntPoly().str() == "[]");
}

TEST_CASE("numeric helpers") {
  CHECK(invkl::binomial(12, 6) == 924);
  CHECK(invkl::binomial(5, 0) == 1);
  CHECK(invkl::catalan(0) == 1);
  CHECK(invkl::catalan(3) == 5);
  CHECK(invkl::catalan(6) == 132);
  CHECK(invkl::pow2(0) == 1);
  CHECK(invkl::pow2(10) == 1024);
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(invkl::generalized_binomial(Rat(1, 2), 1) == Rat(1, 2));
  CHECK(invkl::generalized_binomial(Rat(-1, 2), 2) == Rat(3, 8));
  CHECK(invkl::generalized_binomial(Rat(3), 2) == Rat(3));
  CHECK(invkl::generalized_binomial(Rat(5), 0) == Rat(1));
  // agrees with ordinary binomials on nonnegative integers
  for (unsigned long m = 0; m <= 8; ++m)
    for (unsigned long j = 0; j <= 10; ++j)
      CHECK(invkl::generalized_binomial(Rat(static_cast<long>(m)), j) ==
            Rat(j <= m ? invkl::binomial(m, j) : Int(0)));
}
