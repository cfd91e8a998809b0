#pragma once

#include <functional>
#include <string>
#include <vector>

namespace affinv {

struct AcceptanceResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no runtime target
  std::vector<std::string> failures;  // empty when passed
  std::string summary;
};

struct AcceptanceOptions {
  std::vector<int> only;  // criterion ids; empty = all
  unsigned workers = 1;
  std::function<void(const AcceptanceResult&)> on_result;  // called as each finishes
};

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options = {});

// "PASS [ 1] title (0.42s) summary" / "FAIL ..." plus indented failures.
std::string format_result(const AcceptanceResult& r);

}  // namespace affinv
