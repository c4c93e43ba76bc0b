#include "qbmm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "qbmm/bmm.hpp"
#include "qbmm/constants.hpp"
#include "qbmm/graph_collision.hpp"
#include "qbmm/instances.hpp"
#include "qbmm/mix.hpp"
#include "qbmm/search.hpp"

namespace qbmm {

namespace {

// Envelope constant for the search_all cost check, fixed from the n = 64
// calibration run of this suite.
constexpr double kSearchAllEnvelopeC = 1.0;

std::vector<uint32_t> iota_domain(uint32_t n) {
  std::vector<uint32_t> d(n);
  std::iota(d.begin(), d.end(), 1u);
  return d;
}

Predicate marks_predicate(const std::vector<uint32_t>& domain, const std::vector<bool>& marks,
                          QueryLedger& ledger) {
  return Predicate{domain,
                   [&marks, &ledger](uint32_t x) {
                     ledger.charge_a();
                     return marks[x - 1];
                   },
                   [&marks](uint32_t x) { return marks[x - 1]; }, 1};
}

void tally(CheckResult& check, bool ok) {
  if (ok)
    ++check.passed;
  else
    ++check.failed;
}

bool within_3_sigma(double freq, double p, uint32_t trials) {
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return std::abs(freq - p) <= 3.0 * sigma + 1e-12;
}

}  // namespace

std::vector<CheckResult> validate_primitives(uint64_t base_seed, uint32_t trials) {
  CheckResult grid{"grover single-repetition probability grid (3 sigma)"};
  CheckResult sound_none{"no element ever returned when t_f = 0"};
  CheckResult sound_found{"no 'none' declared in forced mode when t_f > 0"};
  CheckResult membership{"returned elements are marked at return time"};
  CheckResult determinism{"forced-success outputs reproducible for a fixed seed"};
  CheckResult accounting{"outcome charge equals ledger delta and trace sum"};
  CheckResult grover_mc{"grover boosted success rate matches closed form (3 sigma)"};
  CheckResult bbht_mc{"bbht first-repetition rate matches averaged closed form (3 sigma)"};
  CheckResult sa_exact{"search_all forced finds exactly the marked set"};
  CheckResult sa_robust{"search_all tolerates elements unmarked after finds"};
  CheckResult sa_faithful{"search_all faithful finds all marked in >= 99% of seeds"};
  CheckResult sa_cost{"search_all cost within the frozen envelope"};
  CheckResult fm_max{"find_max faithful returns a true maximizer often enough"};

  // Single-repetition success frequency across the (N, k, T) grid.
  for (uint32_t n : {4u, 16u, 64u, 256u}) {
    std::vector<uint32_t> ks = {0u, 1u, n / 4u, n / 2u, n};
    std::vector<uint32_t> ts = {0u, 1u, 2u, static_cast<uint32_t>(std::sqrt(n) / 2),
                                static_cast<uint32_t>(std::sqrt(n))};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (uint32_t k : ks) {
      for (uint32_t t_iter : ts) {
        std::vector<bool> marks(n, false);
        Rng mark_rng(mix64(base_seed ^ (uint64_t{n} << 32 | k)));
        std::vector<uint32_t> shuffled = iota_domain(n);
        std::shuffle(shuffled.begin(), shuffled.end(), mark_rng);
        for (uint32_t i = 0; i < k; ++i) marks[shuffled[i] - 1] = true;

        uint32_t hits = 0;
        const auto domain = iota_domain(n);
        SearchConfig cfg;
        cfg.mode = Mode::kFaithful;
        cfg.rng_seed = mix64(base_seed + n * 17 + k * 5 + t_iter);
        Rng rng = make_rng(cfg);
        for (uint32_t trial = 0; trial < trials; ++trial) {
          QueryLedger ledger;
          if (grover_repetition(marks_predicate(domain, marks, ledger), t_iter, cfg, rng, ledger)) ++hits;
        }
        const double p = grover_success_probability(n, k, t_iter);
        const double freq = static_cast<double>(hits) / trials;
        tally(grid, within_3_sigma(freq, p, trials));
      }
    }
  }

  // Randomized sweep over all four primitives.
  for (uint32_t sweep = 0; sweep < 200; ++sweep) {
    Rng meta(mix64(base_seed + 7777 + sweep));
    const uint32_t n = 1 + static_cast<uint32_t>(meta() % 64);
    const double density = (sweep % 4 == 0) ? 0.0 : std::uniform_real_distribution<double>(0.0, 0.6)(meta);
    std::vector<bool> marks(n, false);
    uint32_t t_f = 0;
    std::bernoulli_distribution coin(density);
    for (uint32_t i = 0; i < n; ++i)
      if (coin(meta)) {
        marks[i] = true;
        ++t_f;
      }
    const auto domain = iota_domain(n);
    const double t = 1.0 + static_cast<double>(meta() % n);

    for (int which = 0; which < 4; ++which) {
      for (Mode mode : {Mode::kForcedSuccess, Mode::kFaithful}) {
        SearchConfig cfg;
        cfg.mode = mode;
        cfg.rng_seed = mix64(base_seed + sweep * 31 + which * 7 + (mode == Mode::kFaithful));
        QueryLedger ledger;
        Rng rng = make_rng(cfg);
        const uint64_t before = ledger.total();
        PrimitiveOutcome out;
        Predicate pred = marks_predicate(domain, marks, ledger);
        switch (which) {
          case 0: out = grover_search(t, pred, cfg, rng, ledger); break;
          case 1: out = bbht_search(1.0, pred, cfg, rng, ledger); break;
          case 2: out = search_all(pred, cfg, rng, ledger); break;
          default:
            out = find_max(pred, [](uint32_t x) { return static_cast<double>(x % 7); }, cfg, rng, ledger);
        }
        if (t_f == 0) tally(sound_none, out.declared_none && !out.element && out.elements.empty());
        if (t_f > 0 && mode == Mode::kForcedSuccess)
          tally(sound_found, which == 2 ? !out.elements.empty() : out.element.has_value());
        if (out.element) tally(membership, marks[*out.element - 1]);
        for (uint32_t x : out.elements) tally(membership, marks[x - 1]);
        uint64_t trace_sum = 0;
        for (const auto& rec : out.trace) trace_sum += rec.charged;
        tally(accounting, out.charged_queries == ledger.total() - before &&
                              out.charged_queries == trace_sum);
        if (mode == Mode::kForcedSuccess) {
          QueryLedger ledger2;
          Rng rng2 = make_rng(cfg);
          PrimitiveOutcome out2;
          Predicate pred2 = marks_predicate(domain, marks, ledger2);
          switch (which) {
            case 0: out2 = grover_search(t, pred2, cfg, rng2, ledger2); break;
            case 1: out2 = bbht_search(1.0, pred2, cfg, rng2, ledger2); break;
            case 2: out2 = search_all(pred2, cfg, rng2, ledger2); break;
            default:
              out2 = find_max(pred2, [](uint32_t x) { return static_cast<double>(x % 7); }, cfg, rng2, ledger2);
          }
          tally(determinism, out.element == out2.element && out.elements == out2.elements &&
                                 out.charged_queries == out2.charged_queries);
        }
      }
    }
  }

  // Boosted grover: N=64, t_f=8, t=8, c_rep=3.
  {
    const uint32_t n = 64, k = 8;
    std::vector<bool> marks(n, false);
    for (uint32_t i = 0; i < k; ++i) marks[i * 7] = true;
    const auto domain = iota_domain(n);
    const uint64_t t_fixed = static_cast<uint64_t>(std::ceil(std::sqrt(64.0 / 8.0)));
    SearchConfig probe_cfg;
    const uint64_t reps = repetition_count(probe_cfg, n);
    const double p_bar = grover_success_probability(n, k, t_fixed);
    const double q = 1.0 - std::pow(1.0 - p_bar, static_cast<double>(reps));
    uint32_t hits = 0;
    for (uint32_t trial = 0; trial < trials; ++trial) {
      SearchConfig cfg;
      cfg.mode = Mode::kFaithful;
      cfg.rng_seed = mix64(base_seed + 90001 + trial);
      QueryLedger ledger;
      Rng rng = make_rng(cfg);
      PrimitiveOutcome out = grover_search(8.0, marks_predicate(domain, marks, ledger), cfg, rng, ledger);
      if (out.element) ++hits;
    }
    tally(grover_mc, within_3_sigma(static_cast<double>(hits) / trials, q, trials));
  }

  // bbht: N=100, t_f=25, t=25; first repetition only.
  {
    const uint32_t n = 100, k = 25;
    std::vector<bool> marks(n, false);
    for (uint32_t i = 0; i < k; ++i) marks[i * 4] = true;
    const auto domain = iota_domain(n);
    double p_bar = 0.0;
    for (uint64_t t_iter = 0; t_iter <= 2; ++t_iter) p_bar += grover_success_probability(n, k, t_iter);
    p_bar /= 3.0;
    uint32_t hits = 0;
    for (uint32_t trial = 0; trial < trials; ++trial) {
      SearchConfig cfg;
      cfg.mode = Mode::kFaithful;
      cfg.rng_seed = mix64(base_seed + 70001 + trial);
      QueryLedger ledger;
      Rng rng = make_rng(cfg);
      PrimitiveOutcome out = bbht_search(25.0, marks_predicate(domain, marks, ledger), cfg, rng, ledger);
      if (!out.trace.empty() && out.trace.front().success) ++hits;
    }
    tally(bbht_mc, within_3_sigma(static_cast<double>(hits) / trials, p_bar, trials));
  }

  // search_all: forced exhaustive, robustness, faithful rate, cost envelope.
  {
    std::vector<bool> marks(8, false);
    marks[2] = marks[4] = true;  // elements 3 and 5
    const auto domain = iota_domain(8);
    SearchConfig cfg;
    cfg.rng_seed = base_seed;
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    PrimitiveOutcome out = search_all(marks_predicate(domain, marks, ledger), cfg, rng, ledger);
    std::vector<uint32_t> got = out.elements;
    std::sort(got.begin(), got.end());
    tally(sa_exact, got == std::vector<uint32_t>{3, 5});
  }
  {
    // Six marked elements in buddy pairs; finding one unmarks its buddy.
    std::vector<bool> marks(16, false);
    for (uint32_t x = 1; x <= 6; ++x) marks[x - 1] = true;
    const auto domain = iota_domain(16);
    SearchConfig cfg;
    cfg.rng_seed = base_seed + 5;
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    Predicate pred = marks_predicate(domain, marks, ledger);
    auto on_found = [&marks](uint32_t x) {
      const uint32_t buddy = (x % 2 == 1) ? x + 1 : x - 1;
      if (buddy >= 1 && buddy <= 16) marks[buddy - 1] = false;
    };
    PrimitiveOutcome out = search_all(pred, cfg, rng, ledger, on_found);
    std::set<uint32_t> pairs_hit;
    bool valid = out.elements.size() == 3;
    for (uint32_t x : out.elements) pairs_hit.insert((x - 1) / 2);
    valid = valid && pairs_hit.size() == 3;
    tally(sa_robust, valid);
  }
  {
    uint32_t all_found = 0;
    const uint32_t seeds = 200;
    const auto domain = iota_domain(64);
    bool cost_ok = true;
    const double envelope =
        kSearchAllEnvelopeC * std::sqrt(64.0 * 8.0) * std::pow(std::log2(64.0), 3.0);
    for (uint32_t s = 0; s < seeds; ++s) {
      Rng meta(mix64(base_seed + 333 + s));
      std::vector<bool> marks(64, false);
      std::vector<uint32_t> shuffled = iota_domain(64);
      std::shuffle(shuffled.begin(), shuffled.end(), meta);
      for (uint32_t i = 0; i < 7; ++i) marks[shuffled[i] - 1] = true;
      SearchConfig cfg;
      cfg.mode = Mode::kFaithful;
      cfg.rng_seed = mix64(base_seed + 4242 + s);
      QueryLedger ledger;
      Rng rng = make_rng(cfg);
      PrimitiveOutcome out = search_all(marks_predicate(domain, marks, ledger), cfg, rng, ledger);
      if (out.elements.size() == 7) ++all_found;
      if (static_cast<double>(out.charged_queries) > envelope) cost_ok = false;
    }
    tally(sa_faithful, all_found >= 198);
    sa_faithful.detail = std::to_string(all_found) + "/200 runs found all 7";
    tally(sa_cost, cost_ok);
  }

  // find_max: two-element comparison plus the faithful maximizer rate.
  {
    std::vector<bool> marks(8, false);
    marks[1] = marks[6] = true;  // elements 2 and 7
    const auto domain = iota_domain(8);
    auto g = [](uint32_t x) { return x == 2 ? 5.0 : (x == 7 ? 9.0 : 0.0); };
    SearchConfig cfg;
    cfg.rng_seed = base_seed;
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    PrimitiveOutcome out = find_max(marks_predicate(domain, marks, ledger), g, cfg, rng, ledger);
    tally(fm_max, out.element == 7u);
  }
  {
    const uint32_t n = 32;
    const auto domain = iota_domain(n);
    auto g = [](uint32_t x) { return static_cast<double>((x * 31 + 7) % 64); };
    uint32_t exact = 0, total = 0;
    for (uint32_t s = 0; s < 500; ++s) {
      Rng meta(mix64(base_seed + 999 + s));
      std::vector<bool> marks(n, false);
      uint32_t t_f = 0;
      for (uint32_t i = 0; i < n; ++i)
        if (meta() % 3 == 0) {
          marks[i] = true;
          ++t_f;
        }
      if (t_f == 0) continue;
      double best = -1.0;
      for (uint32_t x = 1; x <= n; ++x)
        if (marks[x - 1]) best = std::max(best, g(x));
      SearchConfig cfg;
      cfg.mode = Mode::kFaithful;
      cfg.rng_seed = mix64(base_seed + 555 + s);
      QueryLedger ledger;
      Rng rng = make_rng(cfg);
      PrimitiveOutcome out = find_max(marks_predicate(domain, marks, ledger), g, cfg, rng, ledger);
      ++total;
      if (out.element && g(*out.element) == best) ++exact;
    }
    tally(fm_max, static_cast<double>(exact) >= (1.0 - 1.0 / 32.0) * total);
    fm_max.detail = std::to_string(exact) + "/" + std::to_string(total) + " exact maximizers";
  }

  return {grid,       sound_none, sound_found, membership, determinism, accounting, grover_mc,
          bbht_mc,    sa_exact,   sa_robust,   sa_faithful, sa_cost,    fm_max};
}

namespace {

struct GcCase {
  BooleanMatrix c_tilde;
  std::vector<bool> f_a;
  std::vector<bool> f_b;
};

GcCase make_gc_case(uint32_t index, uint64_t base_seed) {
  Rng meta(mix64(base_seed + index));
  const uint32_t sizes[] = {4, 8, 12, 16, 24, 32, 48, 64};
  const uint32_t n = sizes[meta() % 8];
  const uint64_t full = static_cast<uint64_t>(n) * n;
  const uint64_t m_target = std::min<uint64_t>({200, full / 2, meta() % (full / 2 + 1)});
  BooleanMatrix c(n);
  const bool concentrated = meta() % 5 < 2;
  if (concentrated) {
    // Heavy rows force the degree-cut branch when the marks sit on them.
    const uint32_t heavy = 1 + static_cast<uint32_t>(meta() % 3);
    uint64_t placed = 0;
    for (uint32_t h = 0; h < heavy && placed < m_target; ++h) {
      const uint32_t row = 1 + static_cast<uint32_t>(meta() % n);
      for (uint32_t j = 1; j <= n && placed < m_target; ++j) {
        if (!c.get(row, j)) {
          c.set(row, j, true);
          ++placed;
        }
      }
    }
  } else {
    uint64_t placed = 0;
    while (placed < m_target) {
      const uint32_t i = 1 + static_cast<uint32_t>(meta() % n);
      const uint32_t j = 1 + static_cast<uint32_t>(meta() % n);
      if (!c.get(i, j)) {
        c.set(i, j, true);
        ++placed;
      }
    }
  }
  GcCase out{std::move(c), std::vector<bool>(n, false), std::vector<bool>(n, false)};
  const double qa = (index % 7 == 0) ? 0.0 : std::uniform_real_distribution<double>(0.05, 0.8)(meta);
  const double qb = (index % 11 == 0) ? 0.0 : std::uniform_real_distribution<double>(0.05, 0.8)(meta);
  std::bernoulli_distribution coin_a(qa), coin_b(qb);
  for (uint32_t i = 0; i < n; ++i) out.f_a[i] = coin_a(meta);
  for (uint32_t j = 0; j < n; ++j) out.f_b[j] = coin_b(meta);
  if (concentrated && meta() % 2 == 0) {
    // Restrict A-side marks to heavy rows so the top marked vertex has
    // a large complement degree.
    std::vector<bool> heavy_marks(n, false);
    for (uint32_t i = 1; i <= n; ++i)
      if (out.c_tilde.row_ones(i) > 0 && out.f_a[i - 1]) heavy_marks[i - 1] = true;
    out.f_a = heavy_marks;
  }
  return out;
}

}  // namespace

std::vector<CheckResult> validate_gc(uint32_t instances, uint64_t base_seed) {
  CheckResult exact{"forced all_gc equals brute force as a set"};
  CheckResult sound{"every reported pair is a collision (both modes)"};
  CheckResult envelope{"all_gc queries within the frozen envelope"};
  CheckResult has_match{"forced has_gc equals brute-force emptiness test"};
  CheckResult has_witness{"has_gc witnesses are valid collisions"};
  CheckResult has_envelope{"has_gc queries within the frozen envelope"};
  CheckResult certain{"no-collision flag only when no A-side vertex is marked"};
  CheckResult case2{"degree-cut branch exercised with the survivor bound held"};

  uint64_t case2_count = 0;
  for (uint32_t idx = 0; idx < instances; ++idx) {
    GcCase gc_case = make_gc_case(idx, base_seed);
    ComplementGraphView graph(gc_case.c_tilde);
    GcInstance inst = make_vector_instance(graph, gc_case.f_a, gc_case.f_b);
    std::vector<CollisionPair> truth = brute_force_gc(inst);
    std::sort(truth.begin(), truth.end());

    for (Mode mode : {Mode::kForcedSuccess, Mode::kFaithful}) {
      SearchConfig cfg;
      cfg.mode = mode;
      cfg.rng_seed = mix64(base_seed + 31 * idx + (mode == Mode::kFaithful));
      QueryLedger ledger;
      Rng rng = make_rng(cfg);
      const uint64_t before = ledger.total();
      AllGcResult res = all_gc(inst, cfg, rng, ledger);
      const uint64_t spent = ledger.total() - before;

      bool pairs_sound = true;
      for (const auto& [i, j] : res.pairs)
        pairs_sound = pairs_sound && inst.side_a(i) && inst.side_b(j) && graph.edge(i, j);
      tally(sound, pairs_sound);
      if (mode == Mode::kForcedSuccess) {
        tally(exact, res.pairs == truth);
        tally(certain, res.no_collision_certain ==
                           std::none_of(gc_case.f_a.begin(), gc_case.f_a.end(), [](bool v) { return v; }));
      }
      const double cap = all_gc_envelope(inst.n, graph.non_edges(), res.pairs.size(),
                                         constants::kAllGcEnvelopeC);
      tally(envelope, static_cast<double>(spent) <= cap);
      if (res.case_taken == 2) ++case2_count;

      QueryLedger hledger;
      Rng hrng = make_rng(cfg);
      const uint64_t hbefore = hledger.total();
      HasGcResult has = has_gc(inst, cfg, hrng, hledger);
      const uint64_t hspent = hledger.total() - hbefore;
      if (mode == Mode::kForcedSuccess) tally(has_match, has.found == !truth.empty());
      if (has.witness) {
        const auto& [i, j] = *has.witness;
        tally(has_witness, inst.side_a(i) && inst.side_b(j) && graph.edge(i, j));
      }
      tally(has_envelope, static_cast<double>(hspent) <=
                              has_gc_envelope(inst.n, graph.non_edges(), constants::kHasGcEnvelopeC));
    }
  }
  tally(case2, case2_count > 0);
  case2.detail = std::to_string(case2_count) + " degree-cut invocations";

  // Complete bipartite graph: the output is the full marked rectangle.
  {
    const uint32_t n = 12;
    BooleanMatrix empty(n);
    ComplementGraphView graph(empty);
    std::vector<bool> f_a(n, false), f_b(n, false);
    for (uint32_t i = 0; i < 5; ++i) f_a[i * 2] = true;
    for (uint32_t j = 0; j < 3; ++j) f_b[j * 3 + 1] = true;
    GcInstance inst = make_vector_instance(graph, f_a, f_b);
    SearchConfig cfg;
    cfg.rng_seed = base_seed;
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    AllGcResult res = all_gc(inst, cfg, rng, ledger);
    tally(exact, res.pairs.size() == 15);
  }

  return {exact, sound, envelope, has_match, has_witness, has_envelope, certain, case2};
}

std::vector<CheckResult> validate_bmm(uint32_t seeds_per_cell, uint64_t base_seed) {
  CheckResult forced_exact{"forced output equals brute-force product"};
  CheckResult faithful_rate{"faithful output equals brute force on >= 95% of runs"};
  CheckResult budget{"accumulated failure bound below 1/3 on every run"};
  CheckResult lambda_sum{"recorded collision counts sum to the output ones"};
  CheckResult termination{"round count within the halving bound"};
  CheckResult query_bound{"charged queries within the frozen cost bound"};
  CheckResult cascade{"zero input cascades in ceil(log2 n) + 1 empty rounds"};
  CheckResult threshold{"threshold reduction decides near-threshold instances"};

  const std::vector<std::string> families = {"random", "target-ell", "threshold", "single-witness"};
  const std::vector<uint32_t> sizes = {8, 16, 32, 64};
  uint32_t faithful_hits = 0, faithful_total = 0;

  for (size_t fam = 0; fam < families.size(); ++fam) {
    for (uint32_t n : sizes) {
      for (uint32_t s = 0; s < seeds_per_cell; ++s) {
        const uint64_t mixed = mix64(base_seed ^ mix64(fam + 1) ^ mix64(n) ^ mix64(s));
        const uint64_t full = static_cast<uint64_t>(n) * n;
        const uint64_t targets[] = {1, n / 2, n, full / 8, full / 2};
        const uint64_t ell_target = std::min(targets[s % 5], full);
        Instance inst(Instance{BooleanMatrix(1), BooleanMatrix(1), 0, true});
        switch (fam) {
          case 0: {
            const double frac = static_cast<double>(ell_target) / static_cast<double>(full);
            const double p = std::sqrt(1.0 - std::pow(1.0 - frac, 1.0 / n));
            inst = random_instance(n, p, p, mixed);
            break;
          }
          case 1: inst = instance_with_target_ell(n, ell_target, mixed); break;
          case 2: inst = threshold_instance(n, ell_target, mixed); break;
          default: inst = single_witness_instance(n, ell_target, mixed); break;
        }
        const BooleanMatrix truth = brute_force_product(inst.a, inst.b);

        for (Mode mode : {Mode::kForcedSuccess, Mode::kFaithful}) {
          SearchConfig cfg;
          cfg.mode = mode;
          cfg.rng_seed = mix64(mixed + 1 + (mode == Mode::kFaithful));
          auto [c, report] = bmm(inst.a, inst.b, cfg);
          if (mode == Mode::kForcedSuccess) {
            tally(forced_exact, c == truth);
          } else {
            ++faithful_total;
            if (c == truth) ++faithful_hits;
          }
          tally(budget, report.accumulated_failure_bound < 1.0 / 3.0);
          uint64_t lambda_total = 0;
          for (const auto& round : report.rounds) lambda_total += round.collisions_recorded;
          tally(lambda_sum, lambda_total == report.ell_actual && report.ell_actual == c.count_ones());
          const double log_n = std::ceil(std::log2(static_cast<double>(n)));
          tally(termination,
                report.rounds.size() <= n + (n + 1) * (static_cast<uint64_t>(log_n) + 1));
          tally(query_bound,
                static_cast<double>(report.queries_total) <=
                    cost_bound(n, report.ell_actual, constants::kCostBoundCFit, constants::kCostBoundKLog));
        }
      }
    }
  }
  tally(faithful_rate, faithful_hits * 100 >= faithful_total * 95);
  faithful_rate.detail =
      std::to_string(faithful_hits) + "/" + std::to_string(faithful_total) + " faithful runs exact";

  for (uint32_t n : sizes) {
    SearchConfig cfg;
    cfg.rng_seed = mix64(base_seed + n);
    auto [c, report] = bmm(BooleanMatrix(n), BooleanMatrix::all_ones(n), cfg);
    const uint64_t expect = static_cast<uint64_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    tally(cascade, c.count_ones() == 0 && report.total_witnesses == 0 && report.rounds.size() == expect);
  }

  {
    const uint32_t n = 10;
    const uint64_t full = 100;
    uint32_t correct = 0;
    for (uint32_t i = 0; i < 100; ++i) {
      Rng meta(mix64(base_seed + 424242 + i));
      const uint64_t ell = 1 + meta() % full;
      const int64_t offset = static_cast<int64_t>(i % 3) - 1;
      const uint64_t pop = static_cast<uint64_t>(
          std::clamp<int64_t>(static_cast<int64_t>(ell) + offset, 0, static_cast<int64_t>(full)));
      std::vector<bool> f(full, false);
      std::vector<uint32_t> cells(full);
      std::iota(cells.begin(), cells.end(), 0u);
      std::shuffle(cells.begin(), cells.end(), meta);
      for (uint64_t c = 0; c < pop; ++c) f[cells[c]] = true;
      SearchConfig cfg;
      cfg.rng_seed = mix64(base_seed + 515151 + i);
      if (solve_threshold_via_bmm(f, ell, cfg) == (pop >= ell)) ++correct;
    }
    tally(threshold, correct == 100);
    threshold.detail = std::to_string(correct) + "/100 decisions correct";
  }

  return {forced_exact, faithful_rate, budget, lambda_sum, termination, query_bound, cascade, threshold};
}

void print_results(const std::vector<CheckResult>& results) {
  for (const auto& res : results) {
    std::printf("%-64s %s  (%llu passed, %llu failed)%s%s\n", res.name.c_str(),
                res.ok() ? "PASS" : "FAIL", static_cast<unsigned long long>(res.passed),
                static_cast<unsigned long long>(res.failed), res.detail.empty() ? "" : "  -- ",
                res.detail.c_str());
  }
}

bool all_ok(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok(); });
}

}  // namespace qbmm
