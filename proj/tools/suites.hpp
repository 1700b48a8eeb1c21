#pragma once

// Verification suites behind `sedseq verify`.  Each check aggregates one
// statement over its whole index range and reports PASS/FAIL with the worst
// residual, or SKIP with the violated hypothesis named.

#include <optional>
#include <string>
#include <vector>

namespace cli {

struct CheckResult {
  std::string suite;
  std::string check;
  std::string status;  // PASS | FAIL | SKIP
  double residual = 0.0;
  bool exact = false;
  std::string detail;  // skip reason or failure note
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::string> name;  // restrict sequence-indexed checks
  double tolerance = 1e-8;          // float checks at sedenion level
  double tolerance_scalar = 1e-9;   // scalar Binet agreement
};

extern const std::vector<std::string> kSuiteNames;

bool is_suite(const std::string& name);

std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace cli
