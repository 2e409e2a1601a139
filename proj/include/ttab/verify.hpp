#pragma once

#include <string>
#include <vector>

namespace ttab {

struct CaseResult {
  std::string name;
  bool pass = false;
  bool informational = false;  // reported but never fails the suite
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool pass() const;
  int failed() const;
  int checked() const;
};

struct VerifyBudget {
  int max_n = 0;      // 0 = suite default
  int max_cells = 0;  // 0 = suite default
  int order = 0;      // 0 = suite default
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyBudget& budget = {});

}  // namespace ttab
