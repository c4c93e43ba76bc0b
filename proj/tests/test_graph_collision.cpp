#include <doctest.h>

#include <algorithm>

#include "qbmm/constants.hpp"
#include "qbmm/graph_collision.hpp"
#include "qbmm/mix.hpp"

using namespace qbmm;

namespace {

std::vector<bool> bits(std::initializer_list<int> values) {
  std::vector<bool> out;
  for (int v : values) out.push_back(v != 0);
  return out;
}

struct Fixture {
  BooleanMatrix c_tilde;
  ComplementGraphView graph;
  GcInstance inst;

  Fixture(BooleanMatrix c, std::vector<bool> f_a, std::vector<bool> f_b)
      : c_tilde(std::move(c)), graph(c_tilde), inst(make_vector_instance(graph, std::move(f_a), std::move(f_b))) {}
};

BooleanMatrix random_c(uint32_t n, uint64_t m_target, Rng& rng, bool concentrated) {
  BooleanMatrix c(n);
  uint64_t placed = 0;
  if (concentrated) {
    const uint32_t rows = 1 + rng() % 3;
    for (uint32_t r = 0; r < rows && placed < m_target; ++r) {
      const uint32_t i = 1 + rng() % n;
      for (uint32_t j = 1; j <= n && placed < m_target; ++j)
        if (!c.get(i, j)) {
          c.set(i, j, true);
          ++placed;
        }
    }
  } else {
    while (placed < m_target) {
      const uint32_t i = 1 + rng() % n;
      const uint32_t j = 1 + rng() % n;
      if (!c.get(i, j)) {
        c.set(i, j, true);
        ++placed;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("complement view tracks degrees, non-edges, and the degree order") {
  BooleanMatrix c(4);
  c.set(2, 1, true);
  c.set(2, 3, true);
  c.set(4, 2, true);
  ComplementGraphView graph(c);
  CHECK(graph.non_edges() == 3);
  CHECK(graph.edge(1, 1));
  CHECK(!graph.edge(2, 1));
  CHECK(graph.degree(1) == 4);
  CHECK(graph.degree(2) == 2);
  CHECK(graph.degree(4) == 3);
  CHECK(graph.degree_order() == std::vector<uint32_t>{1, 3, 4, 2});

  c.set(1, 4, true);
  graph.note_non_edge_added(1, 4);
  graph.recompute_order();
  CHECK(graph.non_edges() == 4);
  CHECK(graph.degree_order() == std::vector<uint32_t>{3, 1, 4, 2});
}

TEST_CASE("brute_force_gc matches the collision definition") {
  // Complete bipartite on n=2 with one marked vertex per side.
  Fixture complete(BooleanMatrix(2), bits({1, 0}), bits({0, 1}));
  CHECK(brute_force_gc(complete.inst) == std::vector<CollisionPair>{{1, 2}});

  // The single candidate pair sits on a non-edge.
  BooleanMatrix c(3);
  c.set(1, 1, true);
  Fixture deleted(std::move(c), bits({1, 0, 0}), bits({1, 0, 0}));
  CHECK(brute_force_gc(deleted.inst).empty());
}

TEST_CASE("all_gc with no marked A-vertex returns empty and a certain flag") {
  Fixture fx(BooleanMatrix(6), bits({0, 0, 0, 0, 0, 0}), bits({1, 1, 0, 1, 0, 0}));
  SearchConfig cfg;
  QueryLedger ledger;
  Rng rng = make_rng(cfg);
  const auto res = all_gc(fx.inst, cfg, rng, ledger);
  CHECK(res.pairs.empty());
  CHECK(res.no_collision_certain);
}

TEST_CASE("all_gc on a complete bipartite graph outputs the full marked rectangle") {
  const uint32_t n = 9;
  std::vector<bool> f_a(n, false), f_b(n, false);
  f_a[0] = f_a[3] = f_a[7] = true;          // t_A = 3
  f_b[1] = f_b[2] = f_b[4] = f_b[8] = true; // t_B = 4
  Fixture fx(BooleanMatrix(n), f_a, f_b);
  SearchConfig cfg;
  cfg.rng_seed = 5;
  QueryLedger ledger;
  Rng rng = make_rng(cfg);
  const auto res = all_gc(fx.inst, cfg, rng, ledger);
  CHECK(res.pairs.size() == 12);  // t_A * t_B
  auto truth = brute_force_gc(fx.inst);
  std::sort(truth.begin(), truth.end());
  CHECK(res.pairs == truth);
}

TEST_CASE("all_gc equals brute force on 500 seeded instances in forced mode") {
  uint32_t case2_seen = 0;
  for (uint32_t idx = 0; idx < 500; ++idx) {
    Rng meta(mix64(idx + 40000));
    const uint32_t sizes[] = {4, 8, 16, 32, 64};
    const uint32_t n = sizes[meta() % 5];
    const uint64_t m_target = std::min<uint64_t>(200, meta() % (static_cast<uint64_t>(n) * n / 2 + 1));
    const bool concentrated = meta() % 3 == 0;
    BooleanMatrix c = random_c(n, m_target, meta, concentrated);
    std::vector<bool> f_a(n), f_b(n);
    for (uint32_t i = 0; i < n; ++i) f_a[i] = meta() % 4 == 0;
    for (uint32_t j = 0; j < n; ++j) f_b[j] = meta() % 3 == 0;
    if (concentrated && meta() % 2 == 0) {
      for (uint32_t i = 1; i <= n; ++i)
        if (c.row_ones(i) == 0) f_a[i - 1] = false;
    }
    Fixture fx(std::move(c), f_a, f_b);
    SearchConfig cfg;
    cfg.rng_seed = mix64(idx + 90000);
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    const auto res = all_gc(fx.inst, cfg, rng, ledger);
    auto truth = brute_force_gc(fx.inst);
    std::sort(truth.begin(), truth.end());
    REQUIRE(res.pairs == truth);
    if (res.case_taken == 2) ++case2_seen;

    const double cap =
        all_gc_envelope(n, fx.graph.non_edges(), res.pairs.size(), constants::kAllGcEnvelopeC);
    CHECK(static_cast<double>(ledger.total()) <= cap);
  }
  CHECK(case2_seen > 0);
}

TEST_CASE("all_gc outputs only valid collisions in faithful mode") {
  for (uint32_t idx = 0; idx < 100; ++idx) {
    Rng meta(mix64(idx + 123));
    const uint32_t n = 8 + (meta() % 4) * 8;
    const uint64_t m_cap = std::min<uint64_t>(100, static_cast<uint64_t>(n) * n / 2);
    BooleanMatrix c = random_c(n, meta() % m_cap, meta, idx % 4 == 0);
    std::vector<bool> f_a(n), f_b(n);
    for (uint32_t i = 0; i < n; ++i) f_a[i] = meta() % 3 == 0;
    for (uint32_t j = 0; j < n; ++j) f_b[j] = meta() % 3 == 0;
    Fixture fx(std::move(c), f_a, f_b);
    SearchConfig cfg;
    cfg.mode = Mode::kFaithful;
    cfg.rng_seed = mix64(idx);
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    const auto res = all_gc(fx.inst, cfg, rng, ledger);
    for (const auto& [i, j] : res.pairs) {
      CHECK(fx.inst.side_a(i));
      CHECK(fx.inst.side_b(j));
      CHECK(fx.graph.edge(i, j));
    }
  }
}

TEST_CASE("has_gc decides existence and returns a valid witness") {
  for (uint32_t idx = 0; idx < 200; ++idx) {
    Rng meta(mix64(idx + 777));
    const uint32_t n = 4 + meta() % 61;
    const uint64_t m_cap = std::min<uint64_t>(150, static_cast<uint64_t>(n) * n / 2);
    BooleanMatrix c = random_c(n, meta() % m_cap, meta, idx % 3 == 0);
    std::vector<bool> f_a(n), f_b(n);
    for (uint32_t i = 0; i < n; ++i) f_a[i] = meta() % 5 == 0;
    for (uint32_t j = 0; j < n; ++j) f_b[j] = meta() % 4 == 0;
    Fixture fx(std::move(c), f_a, f_b);
    SearchConfig cfg;
    cfg.rng_seed = mix64(idx + 31);
    QueryLedger ledger;
    Rng rng = make_rng(cfg);
    const auto res = has_gc(fx.inst, cfg, rng, ledger);
    CHECK(res.found == !brute_force_gc(fx.inst).empty());
    if (res.witness) {
      const auto& [i, j] = *res.witness;
      CHECK(fx.inst.side_a(i));
      CHECK(fx.inst.side_b(j));
      CHECK(fx.graph.edge(i, j));
    }
    CHECK(static_cast<double>(ledger.total()) <=
          has_gc_envelope(n, fx.graph.non_edges(), constants::kHasGcEnvelopeC));
  }
}

TEST_CASE("empty instance: nothing to collide") {
  Fixture fx(BooleanMatrix(5), bits({0, 0, 0, 0, 0}), bits({0, 0, 0, 0, 0}));
  SearchConfig cfg;
  QueryLedger ledger;
  Rng rng = make_rng(cfg);
  CHECK(has_gc(fx.inst, cfg, rng, ledger).found == false);
}
