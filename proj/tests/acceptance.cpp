#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "scl/suite.hpp"

using namespace scl;

TEST_CASE("acceptance battery") {
  auto results = run_acceptance_suite();
  for (const auto& r : results) {
    std::printf("criterion %2d: %s  %s -- %s (%.1fs)\n", r.number, r.pass ? "pass" : "FAIL",
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    INFO("criterion ", r.number, ": ", r.name, " -- ", r.detail);
    CHECK(r.pass);
  }
}
