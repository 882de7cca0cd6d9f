// Runs every acceptance criterion and reports one line per result.  The
// build registers this binary with ctest; it is also handy standalone.
#include <cstdlib>
#include <iostream>

#include "bext/acceptance.hpp"

int main() {
  auto results = bext::run_acceptance(4);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
              << r.name << " [" << r.detail << "]\n";
  }
  if (!all) {
    std::cout << "ACCEPTANCE FAILED\n";
    return EXIT_FAILURE;
  }
  std::cout << "all " << results.size() << " criteria hold\n";
  return EXIT_SUCCESS;
}
