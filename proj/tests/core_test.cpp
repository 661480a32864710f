#include <doctest.h>

#include "tesler/core.hpp"

using namespace tesler;

TEST_SUITE("core") {

TEST_CASE("parse_alpha") {
  CHECK(parse_alpha("1,0,2").to_string() == "1,0,2");
  CHECK(parse_alpha(" 1, 1 ,1").total() == 3);
  CHECK(parse_alpha("1,0,1").is_binary());
  CHECK_FALSE(parse_alpha("2,1").is_binary());
  CHECK_THROWS_AS(parse_alpha(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_alpha("1,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_alpha("1,,1"), std::invalid_argument);
  CHECK(ones_then_zeros(2, 4).to_string() == "1,1,0,0");
}

TEST_CASE("hook sums of a Tesler matrix") {
  // rows: 0 1 0 / 1 1 / 2
  const auto m = TriMatrix::from_rows({{0, 1, 0}, {1, 1}, {2}});
  CHECK(hook_sums(m) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(m.off_diagonal_sum() == 2);
  CHECK(m.flat_label() == "0 1 0 1 1 2");
  const GTMatrix g(m, parse_alpha("1,1,1"));
  CHECK(diagonal_product(g) == 1 * 2 * 3);
}

TEST_CASE("dense input must be upper triangular") {
  CHECK(hook_sums(std::vector<std::vector<std::int64_t>>{{1, 2}, {0, 0}}) ==
        std::vector<std::int64_t>{3, -2});
  CHECK_THROWS(TriMatrix::from_dense({{1, 0}, {1, 1}}));
}

TEST_CASE("GTMatrix rejects a wrong hook sum") {
  CHECK_THROWS_AS(GTMatrix(TriMatrix::from_rows({{1, 0}, {1}}), parse_alpha("1,0")),
                  std::invalid_argument);
}

TEST_CASE("minimal matrix is diagonal") {
  const auto m = minimal_matrix(parse_alpha("2,0,1"));
  CHECK(m.rank() == 0);
  CHECK(m.diag(0) == 2);
  CHECK(m.diag(2) == 1);
}

TEST_CASE("flow round trip") {
  const auto m = GTMatrix(TriMatrix::from_rows({{0, 1, 0}, {0, 2}, {3}}), parse_alpha("1,1,1"));
  const auto f = to_flow(m);
  CHECK(f.netflow() == std::vector<std::int64_t>{1, 1, 1, -3});
  CHECK(from_flow(f).matrix() == m.matrix());
}

TEST_CASE("subset map") {
  const auto m = GTMatrix(TriMatrix::from_rows({{0, 1, 0}, {0, 1}, {1}}), parse_alpha("1,0,0"));
  CHECK(subset_map(m) == std::set<std::size_t>{1, 2});
  CHECK(subset_map(minimal_matrix(parse_alpha("1,0,0"))).empty());
  CHECK_THROWS(subset_map(minimal_matrix(parse_alpha("1,1,0"))));
}

}
