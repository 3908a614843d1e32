#include <cstdio>

#include "cattrace/acceptance.hpp"

int main() {
  const uint64_t seed = 1;
  auto results = cattrace::run_acceptance(seed);
  for (const auto& r : results)
    std::printf("%s  [%d] %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.details.c_str(), r.seconds);
  bool ok = cattrace::all_passed(results);
  std::printf("%s: %zu criteria\n", ok ? "ALL PASS" : "FAILURES PRESENT", results.size());
  return ok ? 0 : 1;
}
