#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace weilmod {

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && checks > 0; }
};

struct SelfcheckOptions {
  uint64_t seed = 42;
  bool quick = false;  // smaller random sample sizes
};

const std::vector<std::string>& selfcheck_suites();
SuiteReport run_suite(const std::string& name, const SelfcheckOptions& opt);
std::vector<SuiteReport> run_selfcheck(const SelfcheckOptions& opt, const std::vector<std::string>& only = {});

}  // namespace weilmod
