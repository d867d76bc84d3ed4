#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bex {

// One verification check: an extremal statistic over randomized instances
// tested against a pinned bound. `cmp` is "le" (statistic must stay below
// bound) or "ge" (attainment checks).
struct CheckResult {
  std::string suite;
  long instances = 0;
  double max_residual = 0.0;
  double bound = 0.0;
  std::string cmp = "le";
  bool pass = false;
  nlohmann::json witness;  // null unless failing or demonstrative
};

std::vector<CheckResult> run_extension_suite(std::uint64_t seed, int trials,
                                             bool inject_failure = false);
std::vector<CheckResult> run_sqfn_suite(std::uint64_t seed, int trials);
std::vector<CheckResult> run_condexp_suite(std::uint64_t seed, int trials);
std::vector<CheckResult> run_counterexample_suite();
std::vector<CheckResult> run_norms_suite();

bool all_pass(const std::vector<CheckResult>& checks);
nlohmann::json report_json(const std::vector<CheckResult>& checks, std::uint64_t seed, int trials);
std::string report_csv(const std::vector<CheckResult>& checks);

}  // namespace bex
