#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbmm {

struct CheckResult {
  std::string name;
  uint64_t passed = 0;
  uint64_t failed = 0;
  std::string detail;
  bool ok() const { return failed == 0 && passed > 0; }
};

// Search-primitive invariants: the single-repetition probability grid,
// sound declarations, membership, forced-success determinism, charge
// accounting, and the repetition-boosted Monte-Carlo checks.
std::vector<CheckResult> validate_primitives(uint64_t base_seed = 20240901, uint32_t trials = 10000);

// Graph collision: forced-success exactness vs brute force, output
// soundness in both modes, the frozen cost envelopes, and the Case-2
// survivor bound.
std::vector<CheckResult> validate_gc(uint32_t instances = 500, uint64_t base_seed = 20240902);

// BMM driver: forced exactness per family, faithful agreement rate,
// failure-budget cap, collision-count bookkeeping, termination bound,
// cost bound with the frozen constants, and the threshold reduction.
std::vector<CheckResult> validate_bmm(uint32_t seeds_per_cell = 13, uint64_t base_seed = 20240903);

void print_results(const std::vector<CheckResult>& results);
bool all_ok(const std::vector<CheckResult>& results);

}  // namespace qbmm
