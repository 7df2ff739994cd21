#pragma once

#include <string>
#include <vector>

namespace zigzag {

struct VerifyOptions {
  int n{0};         // 0 = suite default (typically both ranks 2 and 3)
  int maxlen{0};    // 0 = suite default word length
  int bound{3};     // reflection/simple enumeration bound
  unsigned seed{20260823};
  int threads{0};   // 0 = ZZT_THREADS or hardware concurrency
};

struct SuiteResult {
  std::string name;
  bool passed{false};
  long checks{0};
  long failure_count{0};
  std::vector<std::string> failures;  // first few, for diagnosis
};

// Suites in acceptance-criteria order: algebra, functors, invertibility,
// metric1, metric2, exotic, pingpong, hurwitz, equiv, faithful.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace zigzag
