#include "qbmm/fit.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qbmm/bench.hpp"

namespace qbmm {

FitResult fit_scaling(const std::vector<FitRowData>& rows, double slope_min, double slope_max) {
  FitResult res;
  res.rows = rows.size();
  if (rows.size() < 2) throw std::invalid_argument("fit: need at least 2 rows");

  std::vector<double> xs(rows.size()), ys(rows.size());
  res.all_within_bound = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    xs[i] = std::log(static_cast<double>(rows[i].n) *
                     std::sqrt(static_cast<double>(rows[i].ell_actual + 1)));
    ys[i] = std::log(std::max<double>(1.0, static_cast<double>(rows[i].queries_total)));
    res.all_within_bound = res.all_within_bound && rows[i].within_bound;
  }
  const double n = static_cast<double>(rows.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx <= 1e-12) {
    res.degenerate = true;
    return res;
  }
  res.slope = sxy / sxx;
  res.intercept = my - res.slope * mx;
  res.r2 = syy <= 1e-12 ? 1.0 : (sxy * sxy) / (sxx * syy);
  res.pass = !res.degenerate && res.slope >= slope_min && res.slope <= slope_max &&
             res.all_within_bound;
  return res;
}

std::vector<FitRowData> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("fit: empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != bench_csv_header())
    throw std::runtime_error("fit: unexpected CSV header: " + line);

  std::vector<FitRowData> rows;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 14)
      throw std::runtime_error("fit: line " + std::to_string(lineno) + ": expected 14 fields, got " +
                               std::to_string(fields.size()));
    FitRowData row;
    try {
      row.n = static_cast<uint32_t>(std::stoul(fields[0]));
      row.ell_actual = std::stoull(fields[4]);
      row.queries_total = std::stoull(fields[8]);
      row.within_bound = fields[10] == "1";
    } catch (const std::exception&) {
      throw std::runtime_error("fit: line " + std::to_string(lineno) + ": malformed numeric field");
    }
    rows.push_back(row);
  }
  return rows;
}

Calibration calibrate_cost_bound(const std::vector<FitRowData>& rows, double margin) {
  if (rows.empty()) throw std::invalid_argument("calibrate: no rows");
  // Per-n envelope of the log-free ratio.
  std::map<uint32_t, double> max_ratio;
  for (const auto& row : rows) {
    const double base = static_cast<double>(row.n) * std::sqrt(static_cast<double>(row.ell_actual + 1));
    const double ratio = static_cast<double>(row.queries_total) / base;
    auto [it, inserted] = max_ratio.try_emplace(row.n, ratio);
    if (!inserted) it->second = std::max(it->second, ratio);
  }
  Calibration cal;
  if (max_ratio.size() >= 2) {
    // Least squares of ln(ratio) against ln(log2(n+2)) over the per-n maxima.
    double mx = 0, my = 0;
    for (const auto& [n, r] : max_ratio) {
      mx += std::log(std::log2(static_cast<double>(n) + 2.0));
      my += std::log(r);
    }
    mx /= static_cast<double>(max_ratio.size());
    my /= static_cast<double>(max_ratio.size());
    double sxx = 0, sxy = 0;
    for (const auto& [n, r] : max_ratio) {
      const double x = std::log(std::log2(static_cast<double>(n) + 2.0));
      const double y = std::log(r);
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    cal.k_log = sxx <= 1e-12 ? 0.0 : std::max(0.0, sxy / sxx);
  }
  double c = 0.0;
  for (const auto& row : rows) {
    const double base = static_cast<double>(row.n) *
                        std::sqrt(static_cast<double>(row.ell_actual + 1)) *
                        std::pow(std::log2(static_cast<double>(row.n) + 2.0), cal.k_log);
    c = std::max(c, static_cast<double>(row.queries_total) / base);
  }
  cal.c_fit = c * margin;
  return cal;
}

}  // namespace qbmm
