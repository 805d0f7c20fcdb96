#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metricgeo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;  // the exact numbers behind the verdict
};

// The eight checkable criteria, in order. Every bound is pinned here; the
// seed only drives the sampling-based ones. Reports carry exact rationals.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

CriterionResult check_generators();
CriterionResult check_thickness(std::uint64_t seed);
CriterionResult check_stegall_embeddings();
CriterionResult check_martingale_extraction();
CriterionResult check_interval_and_branch(std::uint64_t seed);
CriterionResult check_partitions(std::uint64_t seed);
CriterionResult check_delta_trees();
CriterionResult check_reflexivity(std::uint64_t seed);

// Deterministic report (no timings) used by the selftest subcommand.
std::string selftest_report_json(const std::vector<CriterionResult>& results,
                                 std::uint64_t seed);

}  // namespace metricgeo
