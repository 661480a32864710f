#include <doctest.h>

#include "tesler/poset.hpp"
#include "tesler/symbolic.hpp"

using namespace tesler;

namespace {
UniPoly q_minus_one(unsigned k) { return (uq() - UniPoly(1)).pow(k); }
}  // namespace

TEST_SUITE("poset") {

TEST_CASE("P(1,1,1)") {
  const auto tp = build_poset(parse_alpha("1,1,1"));
  const auto& p = tp.poset;
  CHECK(p.size() == 7);
  CHECK(p.cover_count() == 10);
  CHECK(p.rank() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& l : p.rank_levels()) sizes.push_back(l.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2, 1});
  CHECK(find_non_join_pair(p).has_value());
  CHECK(characteristic_polynomial(p) == q_minus_one(3));
  std::int64_t biggest = 0;
  for (auto m : mobius(p)) biggest = std::max<std::int64_t>(biggest, m < 0 ? -m : m);
  CHECK(biggest == 2);
}

TEST_CASE("cover moves") {
  const GTMatrix bottom = minimal_matrix(parse_alpha("1,1,1"));
  // a_12 + 1, a_22 + 1, a_11 - 1
  const GTMatrix up(TriMatrix::from_rows({{0, 1, 0}, {2, 0}, {1}}), parse_alpha("1,1,1"));
  CHECK(is_cover(up, bottom));
  CHECK_FALSE(is_cover(bottom, up));
  CHECK(upper_covers(bottom.matrix()).size() == 3);
}

TEST_CASE("rank is the off-diagonal sum") {
  const auto tp = build_poset(parse_alpha("1,1,1,1"));
  const auto levels = tp.poset.rank_levels();
  for (std::size_t r = 0; r < levels.size(); ++r) {
    for (auto x : levels[r]) CHECK(tp.matrices[x].rank() == r);
  }
  CHECK(tesler_rank(parse_alpha("1,1,1,1")) == tp.poset.rank());
}

TEST_CASE("Boolean lattices and chains") {
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto b = boolean_lattice(k);
    CHECK(b.size() == (std::size_t{1} << k));
    CHECK(characteristic_polynomial(b) == q_minus_one(k));
    CHECK_FALSE(find_non_join_pair(b).has_value());
  }
  CHECK(characteristic_polynomial(chain(3)) == uq(2) * (uq() - UniPoly(1)));
}

TEST_CASE("P(1,0^{n-1}) is Boolean") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto tp = build_poset(ones_then_zeros(1, n));
    CHECK(find_isomorphism(tp.poset, boolean_lattice(n - 1)).has_value());
  }
}

TEST_CASE("Mobius recursion") {
  for (const char* a : {"1,1,1,1", "1,2,3", "2,0,1"}) {
    const auto p = build_poset(parse_alpha(a)).poset;
    const auto ideals = lower_ideals(p);
    const auto mu = mobius(p, ideals);
    const std::size_t bottom = p.by_rank().front();
    CHECK(mu[bottom] == 1);
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y == bottom) continue;
      std::int64_t s = 0;
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (leq(ideals, x, y)) s += mu[x];
      }
      CHECK(s == 0);
    }
  }
}

TEST_CASE("chi is multiplicative") {
  const auto a = build_poset(parse_alpha("1,1,1")).poset;
  const auto b = build_poset(parse_alpha("1,2,3")).poset;
  const auto ab = product(a, b);
  CHECK(ab.size() == a.size() * b.size());
  CHECK(characteristic_polynomial(ab) == characteristic_polynomial(a) * characteristic_polynomial(b));
}

TEST_CASE("isomorphism rejects different shapes") {
  CHECK_FALSE(find_isomorphism(boolean_lattice(2), chain(3)).has_value());
  CHECK_FALSE(is_isomorphic_small(build_poset(parse_alpha("1,1,1")).poset, boolean_lattice(3)));
}

TEST_CASE("find") {
  const auto tp = build_poset(parse_alpha("1,1"));
  CHECK(tp.find(TriMatrix::from_rows({{1, 0}, {1}})).has_value());
  CHECK_FALSE(tp.find(TriMatrix::from_rows({{1, 1}, {1}})).has_value());
}

}
