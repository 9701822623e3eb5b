// Property suites over built-in fixtures, shared by `verify` and the
// acceptance run.
#pragma once

#include <string>
#include <vector>

#include "simplex/sset.hpp"

namespace simplex {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string failure;  ///< first failing fixture and what went wrong
  double seconds = 0;
};

/// grothendieck, moore, wbar, stability, pathspace, strictify, descent, join.
const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown name.  Deterministic given the seed.
SuiteResult run_suite(const std::string& name, unsigned seed = 0, const Budget& budget = {});

}  // namespace simplex
