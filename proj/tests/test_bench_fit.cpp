#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "qbmm/bench.hpp"
#include "qbmm/fit.hpp"

using namespace qbmm;

TEST_CASE("CSV header is frozen") {
  CHECK(bench_csv_header() ==
        "n,family,seed,mode,ell_actual,witnesses,queries_A,queries_B,queries_total,bound,"
        "within_bound,correct,failure_budget,wall_ms");
}

TEST_CASE("a single bench cell yields one row plus the header") {
  BenchConfig cfg;
  cfg.families = {"random"};
  cfg.ns = {8};
  cfg.ells = {8};
  cfg.seeds = 1;
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 8);
  CHECK(rows[0].family == "random");
  CHECK(rows[0].correct);
  CHECK(rows[0].queries_total == rows[0].queries_a + rows[0].queries_b);
  std::ostringstream out;
  write_csv(rows, out);
  size_t lines = 0;
  std::string line;
  std::istringstream in(out.str());
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 2);
}

TEST_CASE("bench rows are deterministic for fixed seeds, even multithreaded") {
  BenchConfig cfg;
  cfg.families = {"threshold", "single-witness"};
  cfg.ns = {8, 16};
  cfg.ells = {4, 32};
  cfg.seeds = 2;
  cfg.jobs = 1;
  const auto rows1 = run_bench(cfg);
  cfg.jobs = 4;
  const auto rows2 = run_bench(cfg);
  REQUIRE(rows1.size() == rows2.size());
  for (size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].queries_total == rows2[i].queries_total);
    CHECK(rows1[i].ell_actual == rows2[i].ell_actual);
    CHECK(rows1[i].family == rows2[i].family);
    CHECK(rows1[i].seed == rows2[i].seed);
  }
}

TEST_CASE("bench rejects unknown families and empty lists") {
  BenchConfig cfg;
  cfg.families = {"nonsense"};
  cfg.ns = {8};
  cfg.ells = {1};
  CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
  cfg.families.clear();
  CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
}

TEST_CASE("fit recovers an exact power law with slope 1 and r2 1") {
  std::vector<FitRowData> rows;
  for (uint32_t n : {16u, 32u, 64u, 128u}) {
    for (uint64_t ell : {1ull, 10ull, 100ull}) {
      FitRowData row;
      row.n = n;
      row.ell_actual = ell;
      row.queries_total =
          static_cast<uint64_t>(std::llround(n * std::sqrt(static_cast<double>(ell + 1))));
      row.within_bound = true;
      rows.push_back(row);
    }
  }
  const FitResult res = fit_scaling(rows);
  CHECK(res.slope == doctest::Approx(1.0).epsilon(0.01));
  CHECK(res.r2 == doctest::Approx(1.0).epsilon(0.01));
  CHECK(res.pass);
}

TEST_CASE("fit flags constant query counts as slope 0 and fails") {
  std::vector<FitRowData> rows;
  for (uint32_t n : {16u, 32u, 64u}) {
    FitRowData row;
    row.n = n;
    row.ell_actual = n;
    row.queries_total = 1000;
    row.within_bound = true;
    rows.push_back(row);
  }
  const FitResult res = fit_scaling(rows);
  CHECK(res.slope == doctest::Approx(0.0));
  CHECK(!res.pass);
}

TEST_CASE("fit reports a degenerate design when all abscissae coincide") {
  std::vector<FitRowData> rows(5, FitRowData{32, 10, 500, true});
  const FitResult res = fit_scaling(rows);
  CHECK(res.degenerate);
  CHECK(!res.pass);
}

TEST_CASE("CSV parse round-trips bench rows and rejects foreign headers") {
  BenchConfig cfg;
  cfg.families = {"random"};
  cfg.ns = {8, 16};
  cfg.ells = {8};
  cfg.seeds = 2;
  const auto rows = run_bench(cfg);
  std::ostringstream out;
  write_csv(rows, out);
  std::istringstream in(out.str());
  const auto parsed = parse_bench_csv(in);
  REQUIRE(parsed.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].n == rows[i].n);
    CHECK(parsed[i].ell_actual == rows[i].ell_actual);
    CHECK(parsed[i].queries_total == rows[i].queries_total);
  }
  std::istringstream bad("foo,bar\n1,2\n");
  CHECK_THROWS_AS(parse_bench_csv(bad), std::runtime_error);
}

TEST_CASE("calibration covers its own rows") {
  std::vector<FitRowData> rows;
  for (uint32_t n : {8u, 16u}) {
    for (uint64_t ell : {1ull, 8ull, 32ull}) {
      FitRowData row;
      row.n = n;
      row.ell_actual = ell;
      row.queries_total = static_cast<uint64_t>(
          50.0 * n * std::sqrt(static_cast<double>(ell + 1)) * std::pow(std::log2(n + 2.0), 2.0));
      row.within_bound = true;
      rows.push_back(row);
    }
  }
  const Calibration cal = calibrate_cost_bound(rows);
  CHECK(cal.k_log == doctest::Approx(2.0).epsilon(0.05));
  for (const auto& row : rows) {
    const double bound = cal.c_fit * row.n * std::sqrt(static_cast<double>(row.ell_actual + 1)) *
                         std::pow(std::log2(row.n + 2.0), cal.k_log);
    CHECK(static_cast<double>(row.queries_total) <= bound);
  }
}
