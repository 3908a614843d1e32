#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cattrace/report.hpp"

namespace cattrace {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// Runs the full verification suite; every check is exact.
std::vector<CriterionResult> run_acceptance(uint64_t seed);

// Deterministic report (no timings); used for the byte-identity check.
Json acceptance_report(const std::vector<CriterionResult>& results, uint64_t seed,
                       const RunCaps& caps);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace cattrace
