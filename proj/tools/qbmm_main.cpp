#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbmm/bench.hpp"
#include "qbmm/bmm.hpp"
#include "qbmm/constants.hpp"
#include "qbmm/fit.hpp"
#include "qbmm/graph_collision.hpp"
#include "qbmm/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

qbmm::Mode parse_mode(const std::string& mode) {
  if (mode == "forced") return qbmm::Mode::kForcedSuccess;
  if (mode == "faithful") return qbmm::Mode::kFaithful;
  throw CLI::ValidationError("--mode must be 'faithful' or 'forced'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_multiply(const std::string& path_a, const std::string& path_b, const std::string& mode,
                 uint64_t seed, double c_rep, double c_fit, double k_log) {
  qbmm::BooleanMatrix a = qbmm::load_matrix(path_a);
  qbmm::BooleanMatrix b = qbmm::load_matrix(path_b);
  if (a.size() != b.size()) {
    std::cerr << "error: dimension mismatch (" << a.size() << " vs " << b.size() << ")\n";
    return kExitUsage;
  }
  qbmm::SearchConfig cfg;
  cfg.mode = parse_mode(mode);
  cfg.rng_seed = seed;
  cfg.c_rep = c_rep;
  auto [c, report] = qbmm::bmm(a, b, cfg);
  std::cout << qbmm::format_matrix(c);
  const bool ok = qbmm::verify(a, b, c);
  const double bound = qbmm::cost_bound(a.size(), report.ell_actual, c_fit, k_log);
  std::cerr << "ell=" << report.ell_actual << " witnesses=" << report.total_witnesses
            << " queries_A=" << report.count_a << " queries_B=" << report.count_b
            << " queries_total=" << report.queries_total << " bound=" << bound
            << " failure_budget=" << report.accumulated_failure_bound
            << " verify=" << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_gc(const std::string& path_c, const std::string& path_fa, const std::string& path_fb,
           const std::string& mode, uint64_t seed, bool exists_only) {
  qbmm::BooleanMatrix c_tilde = qbmm::load_matrix(path_c);
  const uint32_t n = c_tilde.size();
  std::vector<bool> f_a = qbmm::parse_bit_line(read_file(path_fa), n);
  std::vector<bool> f_b = qbmm::parse_bit_line(read_file(path_fb), n);
  qbmm::ComplementGraphView graph(c_tilde);
  qbmm::GcInstance inst = qbmm::make_vector_instance(graph, f_a, f_b);
  qbmm::SearchConfig cfg;
  cfg.mode = parse_mode(mode);
  cfg.rng_seed = seed;
  qbmm::QueryLedger ledger;
  qbmm::Rng rng = qbmm::make_rng(cfg);

  if (exists_only) {
    qbmm::HasGcResult res = qbmm::has_gc(inst, cfg, rng, ledger);
    if (res.found)
      std::cout << "collision " << res.witness->first << " " << res.witness->second << "\n";
    else
      std::cout << "no collision\n";
    std::cerr << "queries_A=" << ledger.count_a() << " queries_B=" << ledger.count_b()
              << " queries_total=" << ledger.total()
              << " failure_bound=" << res.outcome.failure_bound << "\n";
    if (cfg.mode == qbmm::Mode::kForcedSuccess && res.found != !qbmm::brute_force_gc(inst).empty())
      return kExitCheckFailed;
    return kExitOk;
  }

  qbmm::AllGcResult res = qbmm::all_gc(inst, cfg, rng, ledger);
  for (const auto& [i, j] : res.pairs) std::cout << i << " " << j << "\n";
  if (res.pairs.empty()) std::cout << (res.no_collision_certain ? "no collision\n" : "none found\n");
  std::cerr << "collisions=" << res.pairs.size() << " non_edges=" << graph.non_edges()
            << " queries_A=" << ledger.count_a() << " queries_B=" << ledger.count_b()
            << " queries_total=" << ledger.total()
            << " failure_bound=" << res.outcome.failure_bound << "\n";
  if (cfg.mode == qbmm::Mode::kForcedSuccess) {
    auto truth = qbmm::brute_force_gc(inst);
    std::sort(truth.begin(), truth.end());
    if (res.pairs != truth) {
      std::cerr << "verify=FAIL\n";
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"query-accounting simulator for search-based Boolean matrix multiplication"};
  app.require_subcommand(1);

  std::string mode = "forced";
  uint64_t seed = 1;
  double c_rep = qbmm::constants::kDefaultCRep;
  double c_fit = qbmm::constants::kCostBoundCFit;
  double k_log = qbmm::constants::kCostBoundKLog;

  auto* multiply = app.add_subcommand("multiply", "multiply two matrix files and print the product");
  std::string path_a, path_b;
  multiply->add_option("A", path_a, "left matrix file")->required();
  multiply->add_option("B", path_b, "right matrix file")->required();
  multiply->add_option("--mode", mode, "faithful|forced")->capture_default_str();
  multiply->add_option("--seed", seed, "run seed")->capture_default_str();
  multiply->add_option("--c-rep", c_rep, "repetition constant")->capture_default_str();
  multiply->add_option("--c-fit", c_fit, "cost bound constant")->capture_default_str();
  multiply->add_option("--k-log", k_log, "cost bound log exponent")->capture_default_str();

  auto* gc = app.add_subcommand("gc", "solve one graph-collision instance from files");
  std::string path_c, path_fa, path_fb;
  bool exists_only = false;
  gc->add_option("Ctilde", path_c, "recorded-output matrix file (non-edges)")->required();
  gc->add_option("fA", path_fa, "A-side 0/1 line")->required();
  gc->add_option("fB", path_fb, "B-side 0/1 line")->required();
  gc->add_option("--mode", mode, "faithful|forced")->capture_default_str();
  gc->add_option("--seed", seed, "run seed")->capture_default_str();
  gc->add_flag("--exists", exists_only, "only test for existence");

  auto* bench = app.add_subcommand("bench", "run seeded sweeps and write a CSV");
  qbmm::BenchConfig bench_cfg;
  bench_cfg.families = {"target-ell"};
  bench_cfg.ns = {16, 32, 64, 128, 256};
  bench_cfg.ells = {};
  bench_cfg.seeds = 10;
  std::string bench_out = "bench.csv";
  bench->add_option("--families", bench_cfg.families, "instance families")->delimiter(',');
  bench->add_option("--n", bench_cfg.ns, "matrix sizes")->delimiter(',');
  bench->add_option("--ell", bench_cfg.ells, "output-count targets (clamped to n^2)")->delimiter(',');
  bench->add_option("--seeds", bench_cfg.seeds, "seeds per cell")->capture_default_str();
  bench->add_option("--mode", mode, "faithful|forced")->capture_default_str();
  bench->add_option("--c-rep", bench_cfg.c_rep, "repetition constant")->capture_default_str();
  bench->add_option("--c-fit", bench_cfg.c_fit, "cost bound constant");
  bench->add_option("--k-log", bench_cfg.k_log, "cost bound log exponent");
  bench->add_option("--base-seed", bench_cfg.base_seed, "sweep base seed")->capture_default_str();
  bench->add_option("--jobs", bench_cfg.jobs, "worker threads")->capture_default_str();
  bench->add_option("--dump-dir", bench_cfg.dump_dir, "dump generated instances here");
  bench->add_option("--out", bench_out, "output CSV path")->capture_default_str();

  auto* fit = app.add_subcommand("fit", "fit the scaling law to a bench CSV");
  std::string fit_in;
  bool calibrate = false;
  double slope_min = 0.8, slope_max = 1.2, r2_min = 0.9;
  fit->add_option("csv", fit_in, "bench CSV file")->required();
  fit->add_flag("--calibrate", calibrate, "print envelope constants instead of pass/fail");
  fit->add_option("--slope-min", slope_min, "")->capture_default_str();
  fit->add_option("--slope-max", slope_max, "")->capture_default_str();
  fit->add_option("--r2-min", r2_min, "")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "run the invariant suites");
  std::string suite = "all";
  uint32_t val_seeds = 0;
  validate->add_option("--suite", suite, "primitives|gc|bmm|all")->capture_default_str();
  validate->add_option("--seeds", val_seeds, "suite size override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (multiply->parsed()) return cmd_multiply(path_a, path_b, mode, seed, c_rep, c_fit, k_log);
    if (gc->parsed()) return cmd_gc(path_c, path_fa, path_fb, mode, seed, exists_only);

    if (bench->parsed()) {
      bench_cfg.mode = parse_mode(mode);
      if (!bench->count("--c-fit")) bench_cfg.c_fit = c_fit;
      if (!bench->count("--k-log")) bench_cfg.k_log = k_log;
      if (bench_cfg.ells.empty()) bench_cfg.ells = {4, 32, 256, 2048, 16384};
      auto rows = qbmm::run_bench(bench_cfg);
      std::ofstream out(bench_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << bench_out << "\n";
        return kExitUsage;
      }
      qbmm::write_csv(rows, out);
      std::cerr << rows.size() << " rows -> " << bench_out << "\n";
      return kExitOk;
    }

    if (fit->parsed()) {
      std::ifstream in(fit_in, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open " << fit_in << "\n";
        return kExitUsage;
      }
      auto rows = qbmm::parse_bench_csv(in);
      if (calibrate) {
        auto cal = qbmm::calibrate_cost_bound(rows);
        std::printf("c_fit=%.6f k_log=%.6f rows=%zu\n", cal.c_fit, cal.k_log, rows.size());
        return kExitOk;
      }
      auto res = qbmm::fit_scaling(rows, slope_min, slope_max);
      if (res.degenerate) {
        std::cerr << "error: degenerate design matrix (all abscissae equal)\n";
        return kExitUsage;
      }
      const bool pass = res.pass && res.r2 >= r2_min;
      std::printf("slope=%.4f intercept=%.4f r2=%.4f rows=%zu within_bound=%s %s\n", res.slope,
                  res.intercept, res.r2, res.rows, res.all_within_bound ? "all" : "VIOLATED",
                  pass ? "PASS" : "FAIL");
      return pass ? kExitOk : kExitCheckFailed;
    }

    if (validate->parsed()) {
      std::vector<qbmm::CheckResult> results;
      if (suite == "primitives" || suite == "all") {
        auto r = qbmm::validate_primitives();
        results.insert(results.end(), r.begin(), r.end());
      }
      if (suite == "gc" || suite == "all") {
        auto r = qbmm::validate_gc(val_seeds ? val_seeds : 500);
        results.insert(results.end(), r.begin(), r.end());
      }
      if (suite == "bmm" || suite == "all") {
        auto r = qbmm::validate_bmm(val_seeds ? val_seeds : 13);
        results.insert(results.end(), r.begin(), r.end());
      }
      if (results.empty()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      qbmm::print_results(results);
      return qbmm::all_ok(results) ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
