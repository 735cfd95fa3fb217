#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scl {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // counts on success, first failure otherwise
  double seconds = 0.0;  // wall time; excluded from deterministic reports
};

// The full acceptance battery: every criterion runs even after a failure,
// one result per criterion, with the final entry judging the total runtime
// budget. Seeded generators make reruns reproducible; progress notes go to
// log when given.
std::vector<CriterionResult> run_acceptance_suite(unsigned long seed = 20260822,
                                                  std::ostream* log = nullptr);

}  // namespace scl
