#include "qbmm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qbmm/bmm.hpp"
#include "qbmm/instances.hpp"
#include "qbmm/mix.hpp"

namespace qbmm {

namespace {

uint64_t family_id(const std::string& family) {
  if (family == "random") return 1;
  if (family == "target-ell") return 2;
  if (family == "threshold") return 3;
  if (family == "single-witness") return 4;
  throw std::invalid_argument("unknown family: " + family);
}

// Density giving an expected output count near the target for i.i.d. inputs.
double density_for_target(uint32_t n, uint64_t ell) {
  const double full = static_cast<double>(n) * n;
  const double frac = std::clamp(static_cast<double>(ell) / full, 0.0, 1.0);
  const double inner = 1.0 - std::pow(1.0 - frac, 1.0 / static_cast<double>(n));
  return std::clamp(std::sqrt(inner), 0.0, 1.0);
}

Instance make_instance(const std::string& family, uint32_t n, uint64_t ell, uint64_t seed) {
  const uint64_t clamped = std::min<uint64_t>(ell, static_cast<uint64_t>(n) * n);
  switch (family_id(family)) {
    case 1: {
      const double p = density_for_target(n, clamped);
      return random_instance(n, p, p, seed);
    }
    case 2:
      return instance_with_target_ell(n, clamped, seed);
    case 3:
      return threshold_instance(n, clamped, seed);
    default:
      return single_witness_instance(n, clamped, seed);
  }
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::string bench_csv_header() {
  return "n,family,seed,mode,ell_actual,witnesses,queries_A,queries_B,queries_total,bound,"
         "within_bound,correct,failure_budget,wall_ms";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.family << ',' << row.seed << ','
      << (row.mode == Mode::kForcedSuccess ? "forced" : "faithful") << ',' << row.ell_actual << ','
      << row.witnesses << ',' << row.queries_a << ',' << row.queries_b << ',' << row.queries_total
      << ',' << fmt_double(row.bound) << ',' << (row.within_bound ? 1 : 0) << ','
      << (row.correct ? 1 : 0) << ',' << fmt_double(row.failure_budget) << ','
      << fmt_double(row.wall_ms) << '\n';
  return out.str();
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.families.empty() || cfg.ns.empty() || cfg.ells.empty() || cfg.seeds == 0)
    throw std::invalid_argument("bench: families, n-list, ell-list and seeds must be nonempty");
  for (const auto& f : cfg.families) (void)family_id(f);

  struct Cell {
    std::string family;
    uint32_t n;
    uint64_t ell;
    uint64_t seed_idx;
  };
  std::vector<Cell> cells;
  for (const auto& family : cfg.families)
    for (uint32_t n : cfg.ns)
      for (uint64_t ell : cfg.ells)
        for (uint64_t s = 0; s < cfg.seeds; ++s) cells.push_back({family, n, ell, s});

  std::vector<BenchRow> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      const Cell& cell = cells[idx];
      const uint64_t mixed = mix64(cfg.base_seed ^ mix64(family_id(cell.family)) ^
                                   mix64(static_cast<uint64_t>(cell.n) << 32 | cell.ell) ^
                                   mix64(cell.seed_idx + 0x517cc1b727220a95ULL));
      Instance inst = make_instance(cell.family, cell.n, cell.ell, mixed);
      if (!cfg.dump_dir.empty()) dump_instance(cfg.dump_dir, cell.family, cell.n, cell.seed_idx, inst);

      SearchConfig run_cfg;
      run_cfg.mode = cfg.mode;
      run_cfg.c_rep = cfg.c_rep;
      run_cfg.failure_target_exponent = cfg.failure_target_exponent;
      run_cfg.rng_seed = mix64(mixed + 1);
      auto [c, report] = bmm(inst.a, inst.b, run_cfg);

      BenchRow row;
      row.n = cell.n;
      row.family = cell.family;
      row.seed = cell.seed_idx;
      row.mode = cfg.mode;
      row.ell_actual = report.ell_actual;
      row.witnesses = report.total_witnesses;
      row.queries_a = report.count_a;
      row.queries_b = report.count_b;
      row.queries_total = report.queries_total;
      row.bound = cost_bound(cell.n, report.ell_actual, cfg.c_fit, cfg.k_log);
      row.within_bound = static_cast<double>(row.queries_total) <= row.bound;
      row.correct = verify(inst.a, inst.b, c);
      row.failure_budget = report.accumulated_failure_bound;
      row.wall_ms = report.wall_ms;
      rows[idx] = std::move(row);
    }
  };

  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << bench_csv_header() << '\n';
  for (const auto& row : rows) out << to_csv(row);
}

}  // namespace qbmm
