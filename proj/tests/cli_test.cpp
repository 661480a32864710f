#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "tesler/cli.hpp"

using tesler::cli::run;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};
Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
  CHECK(call({"count", "--alpha", "1,1,1,1,1,1,1,1,1,1,1"}).out == "515564231770\n");
  CHECK(call({"count", "--alpha", "1,1,1,1", "--streaming"}).out == "40\n");
  CHECK(call({"count", "--alpha", "1,1,1", "--format", "csv"}).out == "alpha,count\n\"1,1,1\",7\n");
}

TEST_CASE("enumerate") {
  const auto r = call({"enumerate", "--alpha", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 2\n1 0 1\n");
  const auto j = call({"enumerate", "--alpha", "1,1,1", "--format", "json", "--brute"});
  CHECK(std::count(j.out.begin(), j.out.end(), '\n') == 7);
}

TEST_CASE("poset and charpoly") {
  const auto p = call({"poset", "--alpha", "1,1,1"});
  CHECK(p.out.find("covers: 10") != std::string::npos);
  CHECK(p.out.find("lattice: no") != std::string::npos);
  const auto c = call({"charpoly", "--alpha", "1,2,3"});
  CHECK(c.out.rfind("q*(q-1)^3\n", 0) == 0);
  const auto d = call({"poset", "--alpha", "1,1", "--dot"});
  CHECK(d.out.rfind("digraph", 0) == 0);
}

TEST_CASE("quotient-check") {
  CHECK(call({"quotient-check", "--alpha", "1,0,1"}).code == 0);
  // Both pass through the (1,0,0), r = 2 step, where homogeneity fails.
  const auto t = call({"quotient-check", "--alpha", "1,1,1"});
  CHECK(t.code == 1);
  CHECK(t.out.find("FAIL  homogeneity") != std::string::npos);
  CHECK(call({"quotient-check", "--alpha", "1,0,0", "--r", "2"}).code == 1);
  CHECK(call({"quotient-check", "--alpha", "2,0,0"}).code == 0);
}

TEST_CASE("hilbert") {
  CHECK(call({"hilbert", "--n", "3", "--specialize", "q=1,t=1"}).out == "16\n");
  CHECK(call({"hilbert", "--n", "3", "--specialize", "t=0"}).out == "1 + 2*q + 2*q^2 + q^3\n");
  CHECK(call({"hilbert", "--n", "3", "--at", "q=2,t=3"}).out == "120\n");
  CHECK(call({"hilbert", "--n", "4", "--at", "q=1,t=1"}).out == "125\n");
  CHECK(call({"hilbert", "--n", "8"}).code == 3);
}

TEST_CASE("growth commands") {
  CHECK(call({"armstrong", "--n", "3"}).out == "2*q^4 + 4*q^6 + q^8\n");
  CHECK(call({"armstrong", "--alpha", "1,1,1", "--classes"}).out == "2*q^4 + 4*q^6 + q^8\n");
  CHECK(call({"family", "--family", "single-one", "--n", "4"}).code == 0);
  CHECK(call({"bounds", "--n", "8"}).code == 0);
  CHECK(call({"mobius-probe", "--n", "3"}).out.find("M_3 = 2") == 0);
}

TEST_CASE("errors and exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"count"}).code == 2);
  CHECK(call({"count", "--alpha", "1,x"}).code == 2);
  CHECK(call({"count", "--alpha", "1,1", "--format", "yaml"}).code == 2);
  CHECK(call({"enumerate", "--alpha", "1,1,1,1,1", "--ceiling", "10"}).code == 3);
  CHECK(call({"hilbert", "--n", "3", "--at", "q=2"}).code == 2);
}

}
