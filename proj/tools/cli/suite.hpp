#pragma once

// The shipped acceptance battery. Shared by `relstab suite` and the
// acceptance test binary, so both exercise the same cases.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cli/runner.hpp"

namespace relstab::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  Json details = Json::object();
  std::vector<std::string> failures;  // first few witnesses
};

struct SuiteOptions {
  std::uint64_t seed = 1;
};

/// Criteria 1-9; the determinism criterion (10) needs two processes and
/// lives in the acceptance binary.
inline constexpr int kSuiteCriteria = 9;

CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

Json suite_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts);
/// `criterion 3: PASS  d = 0 suite (modctx)  [25 cases]`
std::string criterion_line(const CriterionResult& r);

}  // namespace relstab::cli
