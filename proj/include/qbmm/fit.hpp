#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qbmm {

struct FitRowData {
  uint32_t n = 0;
  uint64_t ell_actual = 0;
  uint64_t queries_total = 0;
  bool within_bound = false;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  size_t rows = 0;
  bool degenerate = false;  // all abscissae equal; no line can be fit
  bool all_within_bound = false;
  bool pass = false;
};

// OLS of log(queries_total) against log(n * sqrt(ell_actual + 1)).
// Passes iff slope lies in [slope_min, slope_max] and every row was within
// its bound. Requires >= 2 distinct abscissae.
FitResult fit_scaling(const std::vector<FitRowData>& rows, double slope_min = 0.8,
                      double slope_max = 1.2);

// Reads rows from a bench CSV; throws on a header or field mismatch.
std::vector<FitRowData> parse_bench_csv(std::istream& in);

// Envelope calibration for cost_bound: per-n maximum of
// queries / (n * sqrt(ell+1)) regressed against log log to choose k_log,
// then c_fit set to cover every calibration row with `margin` headroom.
struct Calibration {
  double c_fit = 0.0;
  double k_log = 0.0;
};
Calibration calibrate_cost_bound(const std::vector<FitRowData>& rows, double margin = 1.25);

}  // namespace qbmm
