#include <doctest.h>

#include "tesler/enumerate.hpp"
#include "tesler/symbolic.hpp"

using namespace tesler;

TEST_SUITE("symbolic") {

TEST_CASE("q-analogs") {
  CHECK(to_string(q_integer(3)) == "1 + q + q^2");
  CHECK(q_integer(0).is_zero());
  CHECK(q_factorial(3) == q_integer(2) * q_integer(3));
  CHECK(evaluate(q_factorial(5), 1) == 120);
  CHECK(to_string(qt_bracket(3)) == "q^2 + q*t + t^2");
  CHECK(qt_bracket(1) == BiPoly(1));
}

TEST_CASE("exact division") {
  const UniPoly p = (uq() - UniPoly(1)).pow(3) * q_integer(4);
  CHECK(divide_by_q_minus_one(p, 3) == q_integer(4));
  CHECK_THROWS_AS(divide_by_q_minus_one(p, 4), InexactDivision);
  const auto [k, rest] = split_q_minus_one(p);
  CHECK(k == 3);
  CHECK(rest == q_integer(4));
  CHECK(exact_divide(BiPoly(bq(2) - bt(2)), BiPoly(bq() - bt())) == bq() + bt());
  CHECK_THROWS_AS(exact_divide(BiPoly(bq(2) + bt(2)), BiPoly(bq() - bt())), InexactDivision);
}

TEST_CASE("coefficients and derivative") {
  const UniPoly p = from_coefficients(std::vector<BigInt>{1, 0, 3});
  CHECK(degree(p) == 2);
  CHECK(coefficients(p) == std::vector<BigInt>{1, 0, 3});
  CHECK(derivative(p) == UniPoly(6) * uq());
  CHECK(degree(UniPoly()) == -1);
}

TEST_CASE("specializations") {
  const BiPoly p = bq(2) + BiPoly(3) * bq() * bt() + bt(2);
  CHECK(evaluate(p, 2, 3) == 4 + 18 + 9);
  CHECK(specialize_t_zero(p) == uq(2));
  CHECK(to_string(specialize_t_inverse_q(p)) == "q^-2 + 3 + q^2");
  CHECK(swap_variables(bq(2) * bt()) == bt(2) * bq());
  CHECK(shift(to_laurent(uq()), -3) == LaurentPoly::monomial(-2));
}

TEST_CASE("factored display") {
  CHECK(factored_string((uq() - UniPoly(1)).pow(3) * uq()) == "q*(q-1)^3");
  CHECK(factored_string(UniPoly(1)) == "1");
}

TEST_CASE("weight of a matrix") {
  // 1 0 0 / 1 0 / 1: three positive entries, e = 0.
  const GTMatrix id(TriMatrix::from_rows({{1, 0, 0}, {1, 0}, {1}}), parse_alpha("1,1,1"));
  CHECK(weight(id).e == 0);
  CHECK(weight(id).numer == BiPoly(1));
  // 0 1 0 / 0 2 / 3: e = 0, brackets [2][3].
  const GTMatrix m(TriMatrix::from_rows({{0, 1, 0}, {0, 2}, {3}}), parse_alpha("1,1,1"));
  CHECK(weight(m).numer == qt_bracket(2) * qt_bracket(3));
  // 0 1 0 / 1 1 / 2: four positive entries, e = 1.
  const GTMatrix w(TriMatrix::from_rows({{0, 1, 0}, {1, 1}, {2}}), parse_alpha("1,1,1"));
  CHECK(weight(w).e == 1);
  CHECK(weight(w).numer == (BiPoly(1) - bt()) * qt_bracket(2));
  CHECK_THROWS_AS(weight(minimal_matrix(parse_alpha("1,0,1"))), UnsupportedInput);
}

TEST_CASE("accumulator matches the direct sum") {
  std::vector<QtWeight> ws;
  WeightAccumulator whole, left, right;
  std::size_t i = 0;
  for (const auto& m : enumerate_family(ones_then_zeros(4, 4)).matrices) {
    ws.push_back(weight(m));
    whole.add(m);
    (i++ % 2 ? left : right).add(m);
  }
  left.merge(right);
  CHECK(whole.matrices() == 40);
  CHECK(whole.finish() == sum_weights(ws));
  CHECK(left.finish() == whole.finish());
}

// Documented discrepancy: with M = (t-1)/(q-1) the weights of T(1^3) do not
// sum to a polynomial. M = (1-q)(1-t) gives the Hilbert series.
TEST_CASE("quotient convention for M fails at n = 3") {
  std::vector<QtWeight> ws;
  for (const auto& m : enumerate_family(ones_then_zeros(3, 3)).matrices) ws.push_back(weight(m));
  CHECK_THROWS_AS(sum_weights(ws, MConvention::quotient), InexactDivision);
  CHECK(evaluate(sum_weights(ws), 1, 1) == 16);
  std::vector<QtWeight> two;
  for (const auto& m : enumerate_family(ones_then_zeros(2, 2)).matrices) two.push_back(weight(m));
  CHECK(sum_weights(two, MConvention::quotient) == sum_weights(two));
}

}
