#include <doctest.h>

#include <set>

#include "tesler/quotient.hpp"

using namespace tesler;

namespace {

std::vector<HookSumVector> binary_vectors(std::size_t n) {
  std::vector<HookSumVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Entry> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1u;
    out.emplace_back(a);
  }
  return out;
}

const ConditionResult& condition(const QuotientReport& r, const std::string& name) {
  for (const auto& c : r.conditions) {
    if (c.name == name) return c;
  }
  throw std::logic_error("no condition " + name);
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("shift maps form B_{r-1}") {
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto s = shift_map_poset(r);
    CHECK(s.maps.size() == (std::size_t{1} << (r - 1)));
    CHECK(find_isomorphism(s.tesler.poset, boolean_lattice(r - 1)).has_value());
  }
  const auto s = shift_map_poset(3);
  const auto e = shift_embed(s.maps.back(), 5);
  CHECK(e.size() == 5);
  CHECK(e.at(0, 0) == 0);
}

TEST_CASE("binary weight") {
  CHECK(binary_weight(parse_alpha("1,1,1")) == 3);
  CHECK(binary_weight(parse_alpha("1,0,0")) == 2);
  CHECK(binary_weight(parse_alpha("0,0,1")) == 0);
  CHECK(binary_weight(parse_alpha("1,1,1,1,1")) == 10);
}

TEST_CASE("motivating step (1,0,0) -> (1,1,0)") {
  const auto qp = quotient_by_sum(parse_alpha("1,0,0"), 2);
  CHECK(qp.target_alpha().to_string() == "1,1,0");
  CHECK(qp.product.size() == 8);
  CHECK(qp.classes.size() == 7);
  const auto w = verify_witness_bijection(qp, build_poset(qp.target_alpha()));
  CHECK(w.ok());
  CHECK(w.target_size == 7);
  CHECK(characteristic_polynomial(qp.quotient) == characteristic_polynomial(qp.product));
}

TEST_CASE("every quotient condition but homogeneity holds for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& alpha : binary_vectors(n)) {
      for (std::size_t p = 0; p < n; ++p) {
        if (alpha[p] != 0) continue;
        const auto qp = quotient_by_sum(alpha, n - p);
        const auto report = check_quotient_conditions(qp);
        CAPTURE(alpha.to_string());
        CAPTURE(n - p);
        for (const auto& c : report.conditions) {
          if (c.name != "homogeneity") CHECK_MESSAGE(c.passed, c.name << ": " << c.witness);
        }
        CHECK(verify_witness_bijection(qp, build_poset(qp.target_alpha())).ok());
        CHECK(characteristic_polynomial(qp.quotient) == characteristic_polynomial(qp.product));
        CHECK_FALSE(isolation_dichotomy_violation(qp).has_value());
        CHECK_FALSE(first_sum_violation(qp).has_value());
      }
    }
  }
}

// Documented discrepancy: the equivalence A + S is not homogeneous in the
// downward sense (every x in X has some y in Y below it) for these steps,
// although the dual statement and all the chi equalities hold. Frozen from
// check_quotient_conditions; a change here means the order or the classes changed.
TEST_CASE("homogeneity failures for n <= 4") {
  const std::set<std::pair<std::string, std::size_t>> expected = {
      {"1,0,0", 2},   {"0,1,0", 3},   {"1,0,1", 2},   {"0,1,1", 3},   {"1,0,0,0", 3},
      {"1,0,0,0", 2}, {"0,1,0,0", 4}, {"0,1,0,0", 2}, {"1,1,0,0", 2}, {"0,0,1,0", 4},
      {"0,0,1,0", 3}, {"1,0,1,0", 3}, {"0,1,1,0", 4}, {"1,0,0,1", 3}, {"1,0,0,1", 2},
      {"0,1,0,1", 4}, {"0,1,0,1", 2}, {"1,1,0,1", 2}, {"0,0,1,1", 4}, {"0,0,1,1", 3},
      {"1,0,1,1", 3}, {"0,1,1,1", 4}};
  std::set<std::pair<std::string, std::size_t>> failing;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& alpha : binary_vectors(n)) {
      for (std::size_t p = 0; p < n; ++p) {
        if (alpha[p] != 0) continue;
        ++cases;
        const auto report = check_quotient_conditions(quotient_by_sum(alpha, n - p));
        if (!condition(report, "homogeneity").passed) failing.emplace(alpha.to_string(), n - p);
      }
    }
  }
  CHECK(cases == 49);
  CHECK(failing == expected);
}

TEST_CASE("homogeneity witness for (1,0,1), r = 2") {
  const auto report = check_quotient_conditions(quotient_by_sum(parse_alpha("1,0,1"), 2));
  const auto& h = condition(report, "homogeneity");
  CHECK_FALSE(h.passed);
  CHECK_FALSE(h.witness.empty());
  CHECK_FALSE(report.all_passed());
}

TEST_CASE("factorization traces") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& alpha : binary_vectors(n)) {
      const auto t = verify_factorization(alpha);
      CAPTURE(alpha.to_string());
      CHECK(t.chi_ok());
      CHECK(t.direct == t.predicted);
      CHECK(t.direct == (uq() - UniPoly(1)).pow(static_cast<unsigned>(binary_weight(alpha))));
    }
  }
  CHECK_THROWS_AS(verify_factorization(parse_alpha("2,0")), std::invalid_argument);
}

TEST_CASE("quotient_by_sum preconditions") {
  CHECK_THROWS_AS(quotient_by_sum(parse_alpha("1,1,1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(quotient_by_sum(parse_alpha("1,0"), 3), std::invalid_argument);
}

TEST_CASE("divisibility") {
  const auto lead = check_divisibility({2, 3}, {1}, WordSide::leading);
  CHECK(lead.vector.to_string() == "1,2,3");
  CHECK(lead.exponent == 2);
  CHECK(lead.divides);
  const auto trail = check_divisibility({2}, {1, 1, 1}, WordSide::trailing);
  CHECK(trail.vector.to_string() == "2,1,1,1");
  CHECK(trail.exponent == 3);
  CHECK(trail.divides);
}

}
