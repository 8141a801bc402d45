#pragma once

#include <string>
#include <vector>

namespace chowflag::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long casesChecked = 0;
  std::string counterexample;  // empty when passed
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool allPassed() const;
  long long totalCases() const;
};

// Invariant sweeps, sized so the default bounds finish in seconds.
SuiteReport runPartitionsSuite(int nMax);        // default bound 15
SuiteReport runSchurSuite(int nMax);             // default bound 8
SuiteReport runChowSuite(int nMax);              // default bound 6
SuiteReport runAlgebraSuite(int q, int nMax);    // default q=2, nMax=3

// name in {partitions, schur, chow, algebra, all}; nMax <= 0 picks the
// suite's default bound. Throws std::invalid_argument on unknown names.
std::vector<SuiteReport> runSuites(const std::string& name, int q, int nMax);

}  // namespace chowflag::verify
