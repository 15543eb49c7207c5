#pragma once

// Verification suites: named groups of checks over one (i,d) instance, plus
// sweep planning over (i,d) grids with per-suite size limits. Used by the
// CLI (`verify`, `sweep`) and by the acceptance tests.

#include <string>
#include <vector>

#include "xpol/crosspoly.hpp"

namespace xpol {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int i = 0, d = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Suites accepted by `verify`: skeleton, symmetry, complement, shelling,
// manifold, homology, and "all" for their union. `supplied` replaces the
// constructed B(i,d) as the complex under test in the manifold suite.
SuiteResult run_suite(const std::string& suite, const BIDParams& p,
                      const Complex* supplied = nullptr);
const std::vector<std::string>& verify_suite_names();

// Sweepable suites (adds counting, membership, vectors, sparla) and their
// default d limits.
const std::vector<std::string>& sweep_suite_names();
int sweep_suite_limit(const std::string& suite);

// Runs the selected suites over every valid (i,d) with d ≤ d_max, in a fixed
// order; jobs > 1 evaluates items concurrently with index-ordered results.
// Throws std::invalid_argument on unknown suites or d_max above a selected
// suite's limit.
std::vector<SuiteResult> run_sweep(const std::vector<std::string>& suites,
                                   int d_max, int jobs);

}  // namespace xpol
