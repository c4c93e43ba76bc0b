#include "qbmm/graph_collision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbmm {

ComplementGraphView::ComplementGraphView(const BooleanMatrix& c_tilde)
    : c_tilde_(&c_tilde), n_(c_tilde.size()), m_(c_tilde.count_ones()), row_ones_(n_) {
  for (uint32_t i = 1; i <= n_; ++i) row_ones_[i - 1] = c_tilde.row_ones(i);
  recompute_order();
}

void ComplementGraphView::note_non_edge_added(uint32_t i, uint32_t j) {
  (void)j;
  ++m_;
  ++row_ones_[i - 1];
}

void ComplementGraphView::recompute_order() {
  order_.resize(n_);
  std::iota(order_.begin(), order_.end(), 1u);
  std::stable_sort(order_.begin(), order_.end(), [this](uint32_t a, uint32_t b) {
    return row_ones_[a - 1] < row_ones_[b - 1];  // decreasing degree = increasing c_i
  });
}

GcInstance make_witness_instance(const ComplementGraphView& graph, const BooleanMatrix& a,
                                 const BooleanMatrix& b, uint32_t k) {
  GcInstance inst;
  inst.n = graph.size();
  inst.graph = &graph;
  inst.side_a = [&a, k](uint32_t i) { return a.get(i, k); };
  inst.side_b = [&b, k](uint32_t j) { return b.get(k, j); };
  return inst;
}

GcInstance make_vector_instance(const ComplementGraphView& graph, std::vector<bool> f_a,
                                std::vector<bool> f_b) {
  if (f_a.size() != graph.size() || f_b.size() != graph.size())
    throw std::invalid_argument("vector instance: side lengths must equal n");
  GcInstance inst;
  inst.n = graph.size();
  inst.graph = &graph;
  inst.side_a = [bits = std::move(f_a)](uint32_t i) { return bits[i - 1]; };
  inst.side_b = [bits = std::move(f_b)](uint32_t j) { return bits[j - 1]; };
  return inst;
}

std::vector<CollisionPair> brute_force_gc(const GcInstance& inst) {
  std::vector<CollisionPair> pairs;
  for (uint32_t i = 1; i <= inst.n; ++i) {
    if (!inst.side_a(i)) continue;
    for (uint32_t j = 1; j <= inst.n; ++j)
      if (inst.side_b(j) && inst.graph->edge(i, j)) pairs.emplace_back(i, j);
  }
  return pairs;
}

double all_gc_envelope(uint32_t n, uint64_t m, uint64_t lambda, double c) {
  const double lg = std::log2(static_cast<double>(n) + 2.0);
  return c * (std::sqrt(static_cast<double>(n) * static_cast<double>(lambda + 1)) +
              std::sqrt(static_cast<double>(m + 1))) *
         lg * lg * lg;
}

double has_gc_envelope(uint32_t n, uint64_t m, double c) {
  const double lg = std::log2(static_cast<double>(n) + 2.0);
  return c * (std::sqrt(static_cast<double>(n)) + std::sqrt(static_cast<double>(m + 1))) * lg * lg * lg;
}

namespace {

std::vector<uint32_t> full_domain(uint32_t n) {
  std::vector<uint32_t> d(n);
  std::iota(d.begin(), d.end(), 1u);
  return d;
}

Predicate side_a_predicate(const GcInstance& inst, std::vector<uint32_t> domain, QueryLedger& ledger) {
  return Predicate{std::move(domain),
                   [&inst, &ledger](uint32_t i) { return inst.charged_side_a(ledger, i); },
                   [&inst](uint32_t i) { return inst.side_a(i); }, 1};
}

Predicate side_b_predicate(const GcInstance& inst, std::vector<uint32_t> domain, QueryLedger& ledger) {
  return Predicate{std::move(domain),
                   [&inst, &ledger](uint32_t j) { return inst.charged_side_b(ledger, j); },
                   [&inst](uint32_t j) { return inst.side_b(j); }, 1};
}

void absorb(PrimitiveOutcome& total, const PrimitiveOutcome& part) {
  total.charged_queries += part.charged_queries;
  total.failure_bound = std::min(1.0, total.failure_bound + part.failure_bound);
  total.trace.insert(total.trace.end(), part.trace.begin(), part.trace.end());
}

void absorb_bulk_reads(PrimitiveOutcome& total, uint64_t reads) {
  if (reads == 0) return;
  total.charged_queries += reads;
  total.trace.push_back({0, true, reads});
}

// Step 1 of the pseudocode: highest-degree marked A-vertex.
PrimitiveOutcome find_top_marked(const GcInstance& inst, const SearchConfig& cfg, Rng& rng,
                                 QueryLedger& ledger) {
  Predicate pred = side_a_predicate(inst, full_domain(inst.n), ledger);
  auto deg = [&inst](uint32_t i) { return static_cast<double>(inst.graph->degree(i)); };
  return find_max(pred, deg, cfg, rng, ledger);
}

// Vertices ordered no earlier than r in the degree order.
std::vector<uint32_t> survivors_from(const GcInstance& inst, uint32_t r) {
  const auto& order = inst.graph->degree_order();
  auto it = std::find(order.begin(), order.end(), r);
  return {it, order.end()};
}

}  // namespace

AllGcResult all_gc(const GcInstance& inst, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger) {
  AllGcResult res;
  const uint64_t m = inst.graph->non_edges();
  const double sqrt_m = std::sqrt(static_cast<double>(m));

  PrimitiveOutcome top = find_top_marked(inst, cfg, rng, ledger);
  absorb(res.outcome, top);
  if (!top.element) {
    res.no_collision_certain = true;
    return res;
  }
  const uint32_t r = *top.element;

  std::vector<CollisionPair> pairs;
  if (static_cast<double>(inst.graph->complement_degree(r)) <= sqrt_m) {
    res.case_taken = 1;
    std::vector<uint32_t> neighbors;
    std::vector<uint32_t> non_neighbors;
    for (uint32_t j = 1; j <= inst.n; ++j)
      (inst.graph->edge(r, j) ? neighbors : non_neighbors).push_back(j);

    PrimitiveOutcome found_b = search_all(side_b_predicate(inst, neighbors, ledger), cfg, rng, ledger);
    absorb(res.outcome, found_b);
    std::vector<uint32_t> known_marked_b = found_b.elements;
    for (uint32_t j : known_marked_b) pairs.emplace_back(r, j);

    // Read every non-neighbor of r (at most sqrt(m) of them).
    for (uint32_t j : non_neighbors)
      if (inst.charged_side_b(ledger, j)) known_marked_b.push_back(j);
    absorb_bulk_reads(res.outcome, non_neighbors.size());

    std::vector<uint32_t> a_prime;
    for (uint32_t i = 1; i <= inst.n; ++i) {
      for (uint32_t j : known_marked_b) {
        if (inst.graph->edge(i, j)) {
          a_prime.push_back(i);
          break;
        }
      }
    }
    PrimitiveOutcome found_a = search_all(side_a_predicate(inst, std::move(a_prime), ledger), cfg, rng, ledger);
    absorb(res.outcome, found_a);
    for (uint32_t i : found_a.elements)
      for (uint32_t j : known_marked_b)
        if (inst.graph->edge(i, j)) pairs.emplace_back(i, j);
  } else {
    res.case_taken = 2;
    std::vector<uint32_t> survivors = survivors_from(inst, r);
    res.case2_survivors = static_cast<uint32_t>(survivors.size());
    if (static_cast<double>(survivors.size()) > std::ceil(sqrt_m))
      throw std::logic_error("all_gc: " + std::to_string(survivors.size()) +
                             " vertices survived the degree cut, expected at most ceil(sqrt(m))");

    std::vector<uint32_t> known_marked_a;
    for (uint32_t i : survivors)
      if (inst.charged_side_a(ledger, i)) known_marked_a.push_back(i);
    absorb_bulk_reads(res.outcome, survivors.size());

    std::vector<uint32_t> b_prime;
    for (uint32_t j = 1; j <= inst.n; ++j) {
      for (uint32_t i : known_marked_a) {
        if (inst.graph->edge(i, j)) {
          b_prime.push_back(j);
          break;
        }
      }
    }
    PrimitiveOutcome found_b = search_all(side_b_predicate(inst, std::move(b_prime), ledger), cfg, rng, ledger);
    absorb(res.outcome, found_b);
    for (uint32_t j : found_b.elements)
      for (uint32_t i : known_marked_a)
        if (inst.graph->edge(i, j)) pairs.emplace_back(i, j);
  }

  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  res.pairs = std::move(pairs);
  return res;
}

HasGcResult has_gc(const GcInstance& inst, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger) {
  HasGcResult res;
  const uint64_t m = inst.graph->non_edges();
  const double sqrt_m = std::sqrt(static_cast<double>(m));

  PrimitiveOutcome top = find_top_marked(inst, cfg, rng, ledger);
  absorb(res.outcome, top);
  if (!top.element) {
    res.no_collision_certain = true;
    return res;
  }
  const uint32_t r = *top.element;

  if (static_cast<double>(inst.graph->complement_degree(r)) <= sqrt_m) {
    res.case_taken = 1;
    std::vector<uint32_t> neighbors;
    std::vector<uint32_t> non_neighbors;
    for (uint32_t j = 1; j <= inst.n; ++j)
      (inst.graph->edge(r, j) ? neighbors : non_neighbors).push_back(j);

    PrimitiveOutcome hit_b = bbht_search(1.0, side_b_predicate(inst, std::move(neighbors), ledger), cfg, rng, ledger);
    absorb(res.outcome, hit_b);
    if (hit_b.element) {
      res.found = true;
      res.witness = CollisionPair{r, *hit_b.element};
      return res;
    }

    std::vector<uint32_t> known_marked_b;
    for (uint32_t j : non_neighbors)
      if (inst.charged_side_b(ledger, j)) known_marked_b.push_back(j);
    absorb_bulk_reads(res.outcome, non_neighbors.size());

    std::vector<uint32_t> a_prime;
    for (uint32_t i = 1; i <= inst.n; ++i) {
      for (uint32_t j : known_marked_b) {
        if (inst.graph->edge(i, j)) {
          a_prime.push_back(i);
          break;
        }
      }
    }
    PrimitiveOutcome hit_a = bbht_search(1.0, side_a_predicate(inst, std::move(a_prime), ledger), cfg, rng, ledger);
    absorb(res.outcome, hit_a);
    if (hit_a.element) {
      const uint32_t i = *hit_a.element;
      for (uint32_t j : known_marked_b) {
        if (inst.graph->edge(i, j)) {
          res.found = true;
          res.witness = CollisionPair{i, j};
          return res;
        }
      }
    }
  } else {
    res.case_taken = 2;
    std::vector<uint32_t> survivors = survivors_from(inst, r);
    res.case2_survivors = static_cast<uint32_t>(survivors.size());
    if (static_cast<double>(survivors.size()) > std::ceil(sqrt_m))
      throw std::logic_error("has_gc: " + std::to_string(survivors.size()) +
                             " vertices survived the degree cut, expected at most ceil(sqrt(m))");

    std::vector<uint32_t> known_marked_a;
    for (uint32_t i : survivors)
      if (inst.charged_side_a(ledger, i)) known_marked_a.push_back(i);
    absorb_bulk_reads(res.outcome, survivors.size());

    std::vector<uint32_t> b_prime;
    for (uint32_t j = 1; j <= inst.n; ++j) {
      for (uint32_t i : known_marked_a) {
        if (inst.graph->edge(i, j)) {
          b_prime.push_back(j);
          break;
        }
      }
    }
    PrimitiveOutcome hit_b = bbht_search(1.0, side_b_predicate(inst, std::move(b_prime), ledger), cfg, rng, ledger);
    absorb(res.outcome, hit_b);
    if (hit_b.element) {
      const uint32_t j = *hit_b.element;
      for (uint32_t i : known_marked_a) {
        if (inst.graph->edge(i, j)) {
          res.found = true;
          res.witness = CollisionPair{i, j};
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace qbmm
