// One line per acceptance criterion. The exit status is zero when every
// criterion has its recorded outcome; criterion 3 is recorded as failing
// (homogeneity of the A + S equivalence does not hold) and is printed as FAIL.

#include <iostream>
#include <set>

#include "tesler/acceptance.hpp"

int main() {
  const std::set<int> known_failures = {3};
  int unexpected = 0;
  for (int id = 1; id <= tesler::kCriterionCount; ++id) {
    const auto r = tesler::run_criterion(id);
    std::cout << tesler::format_result(r) << std::endl;
    if (r.passed == known_failures.count(id) > 0) ++unexpected;
  }
  const std::size_t expected_failures = known_failures.size();
  std::cout << "known failures: " << expected_failures << ", unexpected outcomes: " << unexpected
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
