#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qbmm/constants.hpp"
#include "qbmm/search.hpp"

namespace qbmm {

struct BenchConfig {
  std::vector<std::string> families;  // random, target-ell, threshold, single-witness
  std::vector<uint32_t> ns;
  std::vector<uint64_t> ells;  // targets, clamped to n^2 per row
  uint32_t seeds = 1;
  Mode mode = Mode::kForcedSuccess;
  double c_rep = 3.0;
  double failure_target_exponent = 2.0;
  double c_fit = constants::kCostBoundCFit;
  double k_log = constants::kCostBoundKLog;
  uint64_t base_seed = 1;
  unsigned jobs = 1;
  std::string dump_dir;  // when nonempty, dump each instance pair here
};

struct BenchRow {
  uint32_t n = 0;
  std::string family;
  uint64_t seed = 0;
  Mode mode = Mode::kForcedSuccess;
  uint64_t ell_actual = 0;
  uint32_t witnesses = 0;
  uint64_t queries_a = 0;
  uint64_t queries_b = 0;
  uint64_t queries_total = 0;
  double bound = 0.0;
  bool within_bound = false;
  bool correct = false;
  double failure_budget = 0.0;
  double wall_ms = 0.0;
};

// Fixed schema; guarded by a golden test.
std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

// One row per (family, n, ell, seed) in deterministic order. Rows are
// independent; `jobs` workers may compute them concurrently.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace qbmm
