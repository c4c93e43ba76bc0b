#include "qbmm/bmm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qbmm/constants.hpp"
#include "qbmm/graph_collision.hpp"
#include "qbmm/query_ledger.hpp"

namespace qbmm {

namespace {

// True iff column k of A and row k of B witness some pair not yet in c_tilde.
bool has_unrecorded_collision(const BooleanMatrix& a, const BooleanMatrix& b,
                              const BooleanMatrix& c_tilde, uint32_t k) {
  const uint32_t n = a.size();
  const auto row_b = b.row(k);
  for (uint32_t i = 1; i <= n; ++i) {
    if (!a.get(i, k)) continue;
    const auto row_c = c_tilde.row(i);
    for (size_t w = 0; w < row_b.size(); ++w)
      if (row_b[w] & ~row_c[w]) return true;
  }
  return false;
}

void check_soundness(const BooleanMatrix& c_tilde, const BooleanMatrix& truth) {
  const uint32_t n = c_tilde.size();
  for (uint32_t i = 1; i <= n; ++i) {
    const auto rc = c_tilde.row(i);
    const auto rt = truth.row(i);
    for (size_t w = 0; w < rc.size(); ++w)
      if (rc[w] & ~rt[w]) throw std::logic_error("bmm: recorded a pair absent from the true product");
  }
}

void check_witness_exhausted(const BooleanMatrix& a, const BooleanMatrix& b,
                             const BooleanMatrix& c_tilde, uint32_t k) {
  const uint32_t n = a.size();
  for (uint32_t i = 1; i <= n; ++i) {
    if (!a.get(i, k)) continue;
    for (uint32_t j = 1; j <= n; ++j)
      if (b.get(k, j) && !c_tilde.get(i, j))
        throw std::logic_error("bmm: witness " + std::to_string(k) + " still certifies an unrecorded pair");
  }
}

}  // namespace

std::pair<BooleanMatrix, RunReport> bmm(const BooleanMatrix& a, const BooleanMatrix& b,
                                        const SearchConfig& cfg) {
  if (a.size() != b.size()) throw std::invalid_argument("bmm: dimension mismatch");
  const auto start = std::chrono::steady_clock::now();
  const uint32_t n = a.size();

  BooleanMatrix c_tilde(n);
  ComplementGraphView graph(c_tilde);
  QueryLedger ledger;
  Rng rng = make_rng(cfg);

  RunReport report;
  report.n = n;
  report.mode = cfg.mode;

  // Structural checks are affordable at small n only.
  const bool check_rounds = n <= 64;
  BooleanMatrix truth(1);
  if (check_rounds) truth = brute_force_product(a, b);

  std::vector<uint32_t> live(n);
  std::iota(live.begin(), live.end(), 1u);
  double t = static_cast<double>(n);
  uint32_t round_index = 0;

  while (t >= 1.0) {
    ++round_index;
    RoundRecord round;
    round.index = round_index;
    round.t = t;
    round.ones_at_start = graph.non_edges();

    const uint64_t declared =
        static_cast<uint64_t>(std::ceil(has_gc_envelope(n, graph.non_edges(), constants::kHasGcEnvelopeC)));
    Predicate witness_pred{
        live,
        [&](uint32_t k) {
          GcInstance inst = make_witness_instance(graph, a, b, k);
          return has_gc(inst, cfg, rng, ledger).found;
        },
        [&](uint32_t k) { return has_unrecorded_collision(a, b, c_tilde, k); },
        declared};

    PrimitiveOutcome search = grover_search(t, witness_pred, cfg, rng, ledger);
    report.accumulated_failure_bound =
        std::min(1.0, report.accumulated_failure_bound + search.failure_bound);

    if (search.element) {
      const uint32_t k = *search.element;
      GcInstance inst = make_witness_instance(graph, a, b, k);
      AllGcResult gc = all_gc(inst, cfg, rng, ledger);
      report.accumulated_failure_bound =
          std::min(1.0, report.accumulated_failure_bound + gc.outcome.failure_bound);
      for (const auto& [i, j] : gc.pairs) {
        c_tilde.set(i, j, true);
        graph.note_non_edge_added(i, j);
      }
      graph.recompute_order();
      round.witness = k;
      round.collisions_recorded = gc.pairs.size();
      ++report.total_witnesses;
      live.erase(std::find(live.begin(), live.end(), k));
      t -= 1.0;
      if (check_rounds) {
        check_soundness(c_tilde, truth);
        if (cfg.mode == Mode::kForcedSuccess && n <= 32) check_witness_exhausted(a, b, c_tilde, k);
      }
    } else {
      t /= 2.0;
    }

    round.count_a = ledger.count_a();
    round.count_b = ledger.count_b();
    report.rounds.push_back(round);
  }

  report.ell_actual = c_tilde.count_ones();
  report.count_a = ledger.count_a();
  report.count_b = ledger.count_b();
  report.queries_total = ledger.total();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(c_tilde), std::move(report)};
}

bool verify(const BooleanMatrix& a, const BooleanMatrix& b, const BooleanMatrix& c) {
  return c == brute_force_product(a, b);
}

double cost_bound(uint32_t n, uint64_t ell, double c_fit, double k_log) {
  return c_fit * static_cast<double>(n) * std::sqrt(static_cast<double>(ell + 1)) *
         std::pow(std::log2(static_cast<double>(n) + 2.0), k_log);
}

bool solve_threshold_via_bmm(const std::vector<bool>& f, uint64_t ell, const SearchConfig& cfg,
                             RunReport* report_out) {
  const uint64_t len = f.size();
  const uint32_t n = static_cast<uint32_t>(std::llround(std::sqrt(static_cast<double>(len))));
  if (static_cast<uint64_t>(n) * n != len)
    throw std::invalid_argument("solve_threshold_via_bmm: |f| must be a perfect square");
  if (ell < 1 || ell > len)
    throw std::invalid_argument("solve_threshold_via_bmm: threshold out of range");
  const BooleanMatrix a = BooleanMatrix::identity(n);
  BooleanMatrix b(n);
  for (uint32_t k = 1; k <= n; ++k)
    for (uint32_t j = 1; j <= n; ++j)
      if (f[static_cast<size_t>(k - 1) * n + (j - 1)]) b.set(k, j, true);
  auto [c, report] = bmm(a, b, cfg);
  if (report_out) *report_out = std::move(report);
  return c.count_ones() >= ell;
}

}  // namespace qbmm
