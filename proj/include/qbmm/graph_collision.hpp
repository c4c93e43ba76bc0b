#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qbmm/boolean_matrix.hpp"
#include "qbmm/search.hpp"

namespace qbmm {

// Bipartite graph on [n] x [n] whose edge (i,j) exists iff C~[i,j] = 0.
// Tracks the non-edge count m, per-row complement counts c_i, and the
// A-side ordering by decreasing degree d_i = n - c_i (ties by index).
class ComplementGraphView {
 public:
  explicit ComplementGraphView(const BooleanMatrix& c_tilde);

  uint32_t size() const { return n_; }
  bool edge(uint32_t i, uint32_t j) const { return !c_tilde_->get(i, j); }
  uint64_t non_edges() const { return m_; }
  uint32_t complement_degree(uint32_t i) const { return row_ones_[i - 1]; }  // c_i
  uint32_t degree(uint32_t i) const { return n_ - row_ones_[i - 1]; }        // d_i
  const std::vector<uint32_t>& degree_order() const { return order_; }

  // Owner sets C~[i,j] first, then notifies the view.
  void note_non_edge_added(uint32_t i, uint32_t j);
  void recompute_order();

 private:
  const BooleanMatrix* c_tilde_;
  uint32_t n_;
  uint64_t m_;
  std::vector<uint32_t> row_ones_;
  std::vector<uint32_t> order_;
};

// One graph-collision instance: the graph plus the two side oracles.
// side_a / side_b give the true bits f_A(i), f_B(j) uncharged; charged
// reads go through charged_side_a / charged_side_b which bill one query
// to the A- or B-counter respectively.
struct GcInstance {
  uint32_t n = 0;
  const ComplementGraphView* graph = nullptr;
  std::function<bool(uint32_t)> side_a;
  std::function<bool(uint32_t)> side_b;

  bool charged_side_a(QueryLedger& ledger, uint32_t i) const {
    ledger.charge_a();
    return side_a(i);
  }
  bool charged_side_b(QueryLedger& ledger, uint32_t j) const {
    ledger.charge_b();
    return side_b(j);
  }
};

// Instance whose side oracles are column k of A and row k of B.
GcInstance make_witness_instance(const ComplementGraphView& graph, const BooleanMatrix& a,
                                 const BooleanMatrix& b, uint32_t k);

// Instance from explicit bit vectors (standalone mode).
GcInstance make_vector_instance(const ComplementGraphView& graph, std::vector<bool> f_a,
                                std::vector<bool> f_b);

using CollisionPair = std::pair<uint32_t, uint32_t>;

// Exhaustive uncharged scan; the oracle all other results are checked against.
std::vector<CollisionPair> brute_force_gc(const GcInstance& inst);

struct AllGcResult {
  std::vector<CollisionPair> pairs;  // sorted, deduplicated
  PrimitiveOutcome outcome;
  bool no_collision_certain = false;  // no marked A-side vertex at all
  int case_taken = 0;                 // 0 = none found, 1 or 2
  uint32_t case2_survivors = 0;
};

struct HasGcResult {
  bool found = false;
  std::optional<CollisionPair> witness;
  PrimitiveOutcome outcome;
  bool no_collision_certain = false;
  int case_taken = 0;
  uint32_t case2_survivors = 0;
};

// Finds all graph collisions: locate the highest-degree marked A-vertex r;
// if c_r <= sqrt(m), enumerate marked neighbors of r, read all non-neighbors,
// then enumerate marked vertices among those with a known marked neighbor;
// otherwise drop the A-vertices ordered before r, read the (<= ceil(sqrt m))
// survivors, and enumerate marked B-vertices adjacent to a known marked one.
AllGcResult all_gc(const GcInstance& inst, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger);

// Existence variant: same control flow with single-element searches in
// place of the enumerations; stops at the first collision found.
HasGcResult has_gc(const GcInstance& inst, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger);

// Frozen query-cost envelopes (see constants.hpp for calibration notes).
double all_gc_envelope(uint32_t n, uint64_t m, uint64_t lambda, double c);
double has_gc_envelope(uint32_t n, uint64_t m, double c);

}  // namespace qbmm
