#include <doctest.h>

#include <algorithm>
#include <set>

#include "tesler/enumerate.hpp"

using namespace tesler;

namespace {
std::set<std::string> labels(const FamilyEnumeration& f) {
  std::set<std::string> out;
  for (const auto& m : f.matrices) out.insert(m.matrix().flat_label());
  return out;
}
}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("T(1^n) for small n") {
  const std::vector<int> expected = {1, 2, 7, 40, 357};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(count(ones_then_zeros(n, n)) == expected[n - 1]);
    CHECK(enumerate_family(ones_then_zeros(n, n)).matrices.size() == std::size_t(expected[n - 1]));
  }
  CHECK(count(ones_then_zeros(6, 6)) == 4820);
}

// Frozen from an independent row-by-row enumeration.
TEST_CASE("frozen counts") {
  CHECK(count(parse_alpha("1,2,3")) == 10);
  CHECK(count(parse_alpha("2,0,1")) == 10);
  CHECK(count(parse_alpha("1,0,1,1")) == 14);
  CHECK(count(parse_alpha("0,2,1,0")) == 16);
  CHECK(count(parse_alpha("3,1")) == 4);
  CHECK(count(parse_alpha("2,1,1,1")) == 138);
  CHECK(count(parse_alpha("1,1,0,0,0")) == 90);
  CHECK(count(parse_alpha("1,2,3,4,5")) == 5880);
  CHECK(count(parse_alpha("0,0,0")) == 1);
}

TEST_CASE("generator and brute force agree as sets") {
  for (const char* a : {"1,1,1,1", "2,0,1", "0,2,1,0", "1,2,3", "1,0,1,1,0"}) {
    const auto alpha = parse_alpha(a);
    const auto gen = enumerate_family(alpha);
    const auto brute = brute_force_enumerate(alpha);
    CHECK(labels(gen) == labels(brute));
    CHECK(gen.count == brute.count);
    CHECK(labels(gen).size() == gen.matrices.size());
  }
}

TEST_CASE("canonical order") {
  const auto f = enumerate_family(parse_alpha("1,1,1,1"));
  CHECK(std::is_sorted(f.matrices.begin(), f.matrices.end(), [](const auto& a, const auto& b) {
    return a.matrix().rows() < b.matrix().rows();
  }));
}

TEST_CASE("children count is dpro") {
  for (const auto& m : enumerate_family(parse_alpha("1,1,1,1")).matrices) {
    CHECK(children(m, 1).size() == diagonal_product(m));
    CHECK(children(m, 2).size() == diagonal_product(m));
  }
}

TEST_CASE("sum of dpro is the next count") {
  BigInt total = 0;
  for (const auto& [d, c] : diagonal_product_distribution(ones_then_zeros(5, 5))) total += d * c;
  CHECK(total == 4820);
}

TEST_CASE("streaming counter agrees") {
  CHECK(count_by_streaming(ones_then_zeros(6, 6)) == 4820);
  CHECK(count_by_streaming(parse_alpha("1,2,3")) == 10);
}

TEST_CASE("T(1^11)") { CHECK(count(ones_then_zeros(11, 11)) == BigInt("515564231770")); }

TEST_CASE("ceiling") {
  EnumerationOptions o;
  o.ceiling = 100;
  CHECK_THROWS_AS(enumerate_family(ones_then_zeros(5, 5), o), CeilingExceeded);
  CHECK_THROWS_AS(count_by_streaming(ones_then_zeros(6, 6), o), CeilingExceeded);
}

TEST_CASE("parallel visit sees every matrix") {
  EnumerationOptions o;
  o.jobs = 3;
  std::uint64_t seen = 0;
  visit_family(ones_then_zeros(5, 5), [&](const GTMatrix&) { ++seen; }, o);
  CHECK(seen == 357);
}

}
