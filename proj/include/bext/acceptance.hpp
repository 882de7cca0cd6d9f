#ifndef BEXT_ACCEPTANCE_HPP
#define BEXT_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace bext {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the full verification suite: every check pinned at its stated window,
// bound, and tolerance (all exact).  Results come back in criterion order no
// matter how many worker threads are used.  Deterministic, no wall-clock or
// environment dependence.
std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

}  // namespace bext

#endif
