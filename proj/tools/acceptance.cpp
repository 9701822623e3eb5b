// One line per acceptance criterion; exit status 0 only if all pass.
#include <cstdio>
#include <string>
#include <vector>

#include "simplex/suites.hpp"

int main() {
  struct Criterion {
    int id;
    const char* suite;
    double limit;  // seconds
  };
  const std::vector<Criterion> criteria{
      {1, "grothendieck", 60}, {2, "moore", 120},     {3, "wbar", 120},    {4, "stability", 120},
      {5, "pathspace", 180},   {6, "strictify", 180}, {7, "descent", 300}, {8, "join", 120},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    simplex::SuiteResult r;
    try {
      r = simplex::run_suite(c.suite, 0);
    } catch (const std::exception& e) {
      r.name = c.suite;
      r.pass = false;
      r.failure = e.what();
    }
    std::string why = r.failure;
    if (r.pass && r.seconds > c.limit) {
      r.pass = false;
      why = "over the time limit";
    }
    if (!r.pass) ++failed;
    std::printf("%s criterion %d %-12s %6zu checks %7.2f s%s%s\n", r.pass ? "PASS" : "FAIL", c.id,
                c.suite, r.checks, r.seconds, why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
