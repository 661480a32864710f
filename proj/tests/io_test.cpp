#include <doctest.h>

#include <sstream>

#include "tesler/io.hpp"

using namespace tesler;

namespace {
std::size_t occurrences(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}
}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix json") {
  const GTMatrix m(TriMatrix::from_rows({{0, 1, 0}, {1, 1}, {2}}), parse_alpha("1,1,1"));
  const auto j = matrix_to_json(m);
  CHECK(j.dump() == R"({"alpha":[1,1,1],"n":3,"rows":[[0,1,0],[1,1],[2]]})");
  CHECK(matrix_from_json(j).matrix() == m.matrix());
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"n":2,"alpha":[1,1],"rows":[[1,1],[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"n":2,"alpha":[1],"rows":[[1,0],[1]]})")),
                  std::invalid_argument);
}

TEST_CASE("json lines round trip") {
  const auto f = enumerate_family(parse_alpha("1,1,1"));
  std::stringstream ss;
  write_jsonl(ss, f.matrices);
  const auto back = read_jsonl(ss);
  REQUIRE(back.size() == 7);
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].matrix() == f.matrices[i].matrix());
}

TEST_CASE("census csv") {
  CHECK(census_csv({{parse_alpha("1,1,1"), 7}}) == "alpha,count\n\"1,1,1\",7\n");
}

TEST_CASE("dot export") {
  const auto p3 = build_poset(parse_alpha("1,1,1")).poset;
  const auto dot = export_dot(p3);
  CHECK(dot.rfind("digraph P {", 0) == 0);
  CHECK(occurrences(dot, "[label=") == 7);
  CHECK(occurrences(dot, " -> ") == 10);
  CHECK(occurrences(dot, "rank=same") == 4);

  const auto b2 = export_dot(boolean_lattice(2));
  CHECK(occurrences(b2, "[label=") == 4);
  CHECK(occurrences(b2, " -> ") == 4);

  DotOptions o;
  o.annotate_mobius = true;
  CHECK(occurrences(export_dot(p3, o), "mu=") == 7);

  const auto p4 = build_poset(ones_then_zeros(4, 4)).poset;
  CHECK(occurrences(export_dot(p4), "[label=") == 40);
  o.max_elements = 10;
  CHECK_THROWS_AS(export_dot(p4, o), std::length_error);
}

TEST_CASE("sequence and bounds csv") {
  const auto csv = sequence_csv({family_sequence(parse_family("single-one"), 3)});
  CHECK(csv.rfind("family,n,value,bound_low,bound_high,verdict\n", 0) == 0);
  CHECK(occurrences(csv, "\n") == 4);
  const auto b = bounds_csv({verify_bounds(4)});
  CHECK(b.find(",4,40,") != std::string::npos);
}

TEST_CASE("trace output") {
  const auto t = verify_factorization(parse_alpha("1,0,1"));
  const auto j = trace_json(t);
  CHECK(j.at("chi_ok").get<bool>());
  CHECK(j.at("steps").size() == t.steps.size());
  CHECK(trace_text(t).find("(q-1)^2") != std::string::npos);
  CHECK(quotient_report_json(t.steps.front().report).dump().find("homogeneity") != std::string::npos);
}

}
