#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbmm/boolean_matrix.hpp"
#include "qbmm/search.hpp"

namespace qbmm {

struct RoundRecord {
  uint32_t index = 0;              // round counter, from 1
  double t = 0.0;                  // threshold at round start
  uint64_t ones_at_start = 0;      // m_i: ones in C~ when the round began
  std::optional<uint32_t> witness; // k found this round, if any
  uint64_t collisions_recorded = 0;  // lambda_j for successful rounds
  uint64_t count_a = 0;            // ledger snapshot after the round
  uint64_t count_b = 0;
};

struct RunReport {
  uint32_t n = 0;
  Mode mode = Mode::kForcedSuccess;
  std::vector<RoundRecord> rounds;
  uint32_t total_witnesses = 0;  // T
  uint64_t ell_actual = 0;       // ones in the returned matrix
  uint64_t count_a = 0;
  uint64_t count_b = 0;
  uint64_t queries_total = 0;
  double accumulated_failure_bound = 0.0;
  double wall_ms = 0.0;
};

// Output-sensitive multiplication driver: repeatedly Grover-search the live
// witness candidates for an index k whose column/row still yields an
// unrecorded collision, then record every collision for that k at once.
// A find decrements t and retires k; a miss halves t; the loop ends at t < 1.
std::pair<BooleanMatrix, RunReport> bmm(const BooleanMatrix& a, const BooleanMatrix& b,
                                        const SearchConfig& cfg);

// 1 iff c equals the brute-force product of a and b entrywise.
bool verify(const BooleanMatrix& a, const BooleanMatrix& b, const BooleanMatrix& c);

// Calibrated query envelope: c_fit * n * sqrt(ell+1) * log2(n+2)^k_log.
double cost_bound(uint32_t n, uint64_t ell, double c_fit, double k_log);

// Decides whether f (a bit vector of length n^2, row-major) has at least
// `ell` ones by multiplying A = I against the matrix encoding f and counting
// output ones. Throws std::invalid_argument if |f| is not a perfect square.
bool solve_threshold_via_bmm(const std::vector<bool>& f, uint64_t ell, const SearchConfig& cfg,
                             RunReport* report_out = nullptr);

}  // namespace qbmm
