#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace pq::verify {

// One row per acceptance criterion; detail carries the measured numbers.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  unsigned threads = 2;
};

// Names accepted by run_suite, in criterion order (excluding "all").
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Prints one PASS/FAIL line
// per criterion to stream (may be null) and appends to results. Returns
// false for an unknown suite name.
bool run_suite(const std::string& name, const Options& options,
               std::vector<CriterionResult>& results, std::FILE* stream);

}  // namespace pq::verify
