#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "qbmm/query_ledger.hpp"

namespace qbmm {

enum class Mode { kFaithful, kForcedSuccess };

struct SearchConfig {
  Mode mode = Mode::kForcedSuccess;
  double c_rep = 3.0;                    // repetition boost constant, >= 1
  uint64_t rng_seed = 0;                 // per-run generator seed
  double failure_target_exponent = 2.0;  // per-call design residual N^-e
};

using Rng = std::mt19937_64;

inline Rng make_rng(const SearchConfig& cfg) { return Rng(cfg.rng_seed); }

// A searchable finite domain. `charged` is the simulated evaluation that
// consumes ledger queries; `ideal` is the omniscient uncharged truth used
// to determine outcomes. A single charged evaluation must consume at most
// `declared_cost` queries (enforced at runtime).
struct Predicate {
  std::vector<uint32_t> domain;
  std::function<bool(uint32_t)> charged;
  std::function<bool(uint32_t)> ideal;
  uint64_t declared_cost = 1;
};

struct RepetitionRecord {
  uint64_t iterations = 0;  // Grover iterations T used this repetition
  bool success = false;
  uint64_t charged = 0;  // queries charged for this repetition
};

struct PrimitiveOutcome {
  std::optional<uint32_t> element;  // single-result primitives
  std::vector<uint32_t> elements;   // search_all
  bool declared_none = false;
  uint64_t charged_queries = 0;
  double failure_bound = 0.0;  // design residual of this call, in [0,1]
  std::vector<RepetitionRecord> trace;
};

// sin^2((2T+1) * arcsin(sqrt(k/N))): success probability of measuring a
// marked element after T Grover iterations from the uniform state.
double grover_success_probability(uint64_t n_domain, uint64_t n_marked, uint64_t iterations);

// Number of boosting repetitions for a domain of size n.
uint64_t repetition_count(const SearchConfig& cfg, size_t n_domain);

// Grover search under the promise t/2 <= t_f <= t. For t <= N/4 every
// repetition runs T = ceil(sqrt(N/t)) iterations; for larger t repetitions
// alternate T in {0, 1} to avoid rotating past the peak. Each repetition
// charges (2T+1) * q where q is the measured cost of one fresh charged
// evaluation on a uniformly drawn element. Declares none with certainty
// when t_f = 0; t > N declares none immediately at zero cost.
PrimitiveOutcome grover_search(double t, const Predicate& pred, const SearchConfig& cfg, Rng& rng,
                               QueryLedger& ledger);

// One amplification repetition at an explicit iteration count, charged like
// a grover_search repetition. Exposed for the probability-faithfulness
// checks; returns whether the measurement hit a marked element.
bool grover_repetition(const Predicate& pred, uint64_t iterations, const SearchConfig& cfg, Rng& rng,
                       QueryLedger& ledger);

// Search with only a lower bound t on the marked count: each repetition
// draws T uniformly from {0, ..., floor(sqrt(N/t))}. Callers with no bound
// use t = 1.
PrimitiveOutcome bbht_search(double t, const Predicate& pred, const SearchConfig& cfg, Rng& rng,
                             QueryLedger& ledger);

// Finds all marked elements: t starts at |U|; grover_search(t) on the live
// subset V; a find outputs x, removes it from V and decrements t; a miss
// halves t; stops when t < 1. Tolerates elements becoming unmarked between
// iterations. `on_found` (optional) runs after each find, before the next
// iteration, so callers may update the state the predicate reads.
PrimitiveOutcome search_all(const Predicate& pred, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger,
                            const std::function<void(uint32_t)>& on_found = {});

// Maximum of `score` over marked elements. Scores are uncharged; only
// marked-ness tests cost queries. Charges ceil(c_rep * sqrt(N) * log2(N+2))
// evaluations. Faithful mode returns the exact maximizer with probability
// 1 - N^-failure_target_exponent, otherwise a uniform marked element.
// Ties break toward the smallest domain index.
PrimitiveOutcome find_max(const Predicate& pred, const std::function<double(uint32_t)>& score,
                          const SearchConfig& cfg, Rng& rng, QueryLedger& ledger);

}  // namespace qbmm
