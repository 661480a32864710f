#include <doctest.h>

#include "tesler/harmonics.hpp"

using namespace tesler;

TEST_SUITE("harmonics") {

TEST_CASE("Hilb for n = 2 fixes the sign of M") {
  CHECK(hilbert_series(2).series == BiPoly(1) + bq() + bt());
}

TEST_CASE("Hilb for n = 3") {
  const auto h = hilbert_series(3);
  CHECK(to_string(h.series) ==
        "1 + 2*q + 2*t + 2*q^2 + 3*q*t + 2*t^2 + q^3 + q^2*t + q*t^2 + t^3");
  CHECK(h.dimension == 16);
}

TEST_CASE("identities for n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto h = hilbert_series(n);
    CAPTURE(n);
    CHECK(h.dimension == boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1)));
    CHECK(verify_inverse_specialization(h).ok);
    CHECK(verify_t_zero_specialization(h).ok);
    CHECK(h.series == swap_variables(h.series));
    for (const auto& [e, c] : h.series.terms()) CHECK(c > 0);
  }
}

TEST_CASE("parallel sum is identical") {
  HilbertOptions o;
  o.jobs = 3;
  CHECK(hilbert_series(5, o).series == hilbert_series(5).series);
}

TEST_CASE("permutation Tesler sum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto s = verify_permutation_sum(n);
    CHECK(s.ok());
  }
  // Frozen from an independent enumeration: n! permutation Tesler matrices.
  CHECK(verify_permutation_sum(5).matrices == 120);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(hilbert_series(8), CeilingExceeded);
}

TEST_CASE("compare reports the first difference") {
  const auto c = compare(LaurentPoly::monomial(1), LaurentPoly::monomial(2));
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.diff.empty());
  CHECK(compare(LaurentPoly(3), LaurentPoly(3)).ok);
}

}
