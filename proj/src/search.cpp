#include "qbmm/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qbmm {

double grover_success_probability(uint64_t n_domain, uint64_t n_marked, uint64_t iterations) {
  if (n_domain == 0 || n_marked == 0) return 0.0;
  if (n_marked >= n_domain) return 1.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(n_marked) / static_cast<double>(n_domain)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return std::clamp(s * s, 0.0, 1.0);
}

uint64_t repetition_count(const SearchConfig& cfg, size_t n_domain) {
  return static_cast<uint64_t>(std::ceil(cfg.c_rep * std::log2(static_cast<double>(n_domain) + 2.0)));
}

namespace {

struct ProbeCost {
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t total() const { return a + b; }
};

// One fresh simulated evaluation on a uniformly drawn element. Its measured
// cost stands in for the per-iteration cost of the superposed evaluations.
ProbeCost run_probe(const Predicate& pred, Rng& rng, QueryLedger& ledger) {
  std::uniform_int_distribution<size_t> pick(0, pred.domain.size() - 1);
  const uint32_t u = pred.domain[pick(rng)];
  const uint64_t a0 = ledger.count_a();
  const uint64_t b0 = ledger.count_b();
  (void)pred.charged(u);
  ProbeCost cost{ledger.count_a() - a0, ledger.count_b() - b0};
  if (cost.total() > pred.declared_cost)
    throw std::logic_error("predicate evaluation used " + std::to_string(cost.total()) +
                           " queries, declared at most " + std::to_string(pred.declared_cost));
  return cost;
}

std::vector<uint32_t> marked_elements(const Predicate& pred) {
  std::vector<uint32_t> marked;
  for (uint32_t x : pred.domain)
    if (pred.ideal(x)) marked.push_back(x);
  return marked;
}

uint32_t uniform_choice(const std::vector<uint32_t>& items, Rng& rng) {
  std::uniform_int_distribution<size_t> pick(0, items.size() - 1);
  return items[pick(rng)];
}

// Shared repetition loop for the two single-result searches. `draw_t` yields
// the iteration count for each repetition.
template <typename DrawT>
PrimitiveOutcome repeated_search(const Predicate& pred, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger,
                                 DrawT&& draw_t, double per_call_residual) {
  PrimitiveOutcome out;
  const std::vector<uint32_t> marked = marked_elements(pred);
  const size_t n = pred.domain.size();
  // Forced mode runs the idealized schedule once; faithful mode boosts.
  const uint64_t reps = cfg.mode == Mode::kForcedSuccess ? 1 : repetition_count(cfg, n);
  for (uint64_t rep = 0; rep < reps; ++rep) {
    const uint64_t t_iters = draw_t(rep, rng);
    const ProbeCost probe = run_probe(pred, rng, ledger);
    ledger.charge_a(2 * t_iters * probe.a);
    ledger.charge_b(2 * t_iters * probe.b);
    const uint64_t rep_charge = (2 * t_iters + 1) * probe.total();
    bool success;
    if (cfg.mode == Mode::kForcedSuccess) {
      success = !marked.empty();
    } else {
      const double p = grover_success_probability(n, marked.size(), t_iters);
      success = std::bernoulli_distribution(p)(rng);
    }
    out.trace.push_back({t_iters, success, rep_charge});
    out.charged_queries += rep_charge;
    if (success) {
      out.element = uniform_choice(marked, rng);
      break;
    }
  }
  out.declared_none = !out.element.has_value();
  out.failure_bound = marked.empty() ? 0.0 : per_call_residual;
  return out;
}

}  // namespace

PrimitiveOutcome grover_search(double t, const Predicate& pred, const SearchConfig& cfg, Rng& rng,
                               QueryLedger& ledger) {
  if (t < 1.0) throw std::invalid_argument("grover_search: t must be at least 1");
  PrimitiveOutcome out;
  const size_t n = pred.domain.size();
  if (n == 0 || t > static_cast<double>(n)) {
    out.declared_none = true;
    return out;
  }
  // For t <= N/4 the fixed count ceil(sqrt(N/t)) keeps the rotation inside
  // the first quadrant across the whole promise window t/2 <= t_f <= t. For
  // larger t a single iteration can rotate past the peak (theta near pi/2),
  // so repetitions alternate T = 0 and T = 1; one of the two succeeds with
  // probability at least 1/2 anywhere in that window.
  const bool wide = t > static_cast<double>(n) / 4.0;
  const uint64_t t_fixed =
      static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n) / t)));
  const double residual = std::pow(2.0, -static_cast<double>(repetition_count(cfg, n)));
  auto draw = [wide, t_fixed](uint64_t rep, Rng&) { return wide ? rep % 2 : t_fixed; };
  return repeated_search(pred, cfg, rng, ledger, draw, residual);
}

bool grover_repetition(const Predicate& pred, uint64_t iterations, const SearchConfig& cfg, Rng& rng,
                       QueryLedger& ledger) {
  if (pred.domain.empty()) return false;
  const std::vector<uint32_t> marked = marked_elements(pred);
  const ProbeCost probe = run_probe(pred, rng, ledger);
  ledger.charge_a(2 * iterations * probe.a);
  ledger.charge_b(2 * iterations * probe.b);
  if (cfg.mode == Mode::kForcedSuccess) return !marked.empty();
  const double p = grover_success_probability(pred.domain.size(), marked.size(), iterations);
  return std::bernoulli_distribution(p)(rng);
}

PrimitiveOutcome bbht_search(double t, const Predicate& pred, const SearchConfig& cfg, Rng& rng,
                             QueryLedger& ledger) {
  if (t < 1.0) throw std::invalid_argument("bbht_search: t must be at least 1");
  PrimitiveOutcome out;
  const size_t n = pred.domain.size();
  if (n == 0) {
    out.declared_none = true;
    return out;
  }
  const uint64_t t_max =
      static_cast<uint64_t>(std::floor(std::sqrt(static_cast<double>(n) / t)));
  const double residual = std::pow(0.75, static_cast<double>(repetition_count(cfg, n)));
  auto draw = [t_max](uint64_t, Rng& r) { return std::uniform_int_distribution<uint64_t>(0, t_max)(r); };
  return repeated_search(pred, cfg, rng, ledger, draw, residual);
}

PrimitiveOutcome search_all(const Predicate& pred, const SearchConfig& cfg, Rng& rng, QueryLedger& ledger,
                            const std::function<void(uint32_t)>& on_found) {
  PrimitiveOutcome out;
  std::vector<uint32_t> live = pred.domain;
  double t = static_cast<double>(live.size());
  while (t >= 1.0) {
    Predicate sub{live, pred.charged, pred.ideal, pred.declared_cost};
    PrimitiveOutcome step = grover_search(t, sub, cfg, rng, ledger);
    out.charged_queries += step.charged_queries;
    out.failure_bound = std::min(1.0, out.failure_bound + step.failure_bound);
    out.trace.insert(out.trace.end(), step.trace.begin(), step.trace.end());
    if (step.element) {
      const uint32_t x = *step.element;
      out.elements.push_back(x);
      live.erase(std::find(live.begin(), live.end(), x));
      t -= 1.0;
      if (on_found) on_found(x);
    } else {
      t /= 2.0;
    }
  }
  out.declared_none = out.elements.empty();
  return out;
}

PrimitiveOutcome find_max(const Predicate& pred, const std::function<double(uint32_t)>& score,
                          const SearchConfig& cfg, Rng& rng, QueryLedger& ledger) {
  PrimitiveOutcome out;
  const size_t n = pred.domain.size();
  if (n == 0) {
    out.declared_none = true;
    return out;
  }
  const std::vector<uint32_t> marked = marked_elements(pred);
  // Faithful mode pays the boosted schedule; forced mode the bare sqrt(N) pass.
  const uint64_t evals =
      cfg.mode == Mode::kForcedSuccess
          ? static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))))
          : static_cast<uint64_t>(std::ceil(cfg.c_rep * std::sqrt(static_cast<double>(n)) *
                                            std::log2(static_cast<double>(n) + 2.0)));
  const ProbeCost probe = run_probe(pred, rng, ledger);
  ledger.charge_a((evals - 1) * probe.a);
  ledger.charge_b((evals - 1) * probe.b);
  out.charged_queries = evals * probe.total();
  out.trace.push_back({evals, !marked.empty(), out.charged_queries});
  if (marked.empty()) {
    out.declared_none = true;
    return out;
  }
  uint32_t best = marked.front();
  for (uint32_t x : marked) {
    const double sx = score(x);
    const double sb = score(best);
    if (sx > sb || (sx == sb && x < best)) best = x;
  }
  if (cfg.mode == Mode::kForcedSuccess) {
    out.element = best;
  } else {
    const double miss = std::pow(static_cast<double>(n), -cfg.failure_target_exponent);
    if (std::bernoulli_distribution(miss)(rng))
      out.element = uniform_choice(marked, rng);
    else
      out.element = best;
  }
  out.failure_bound = std::pow(static_cast<double>(n), -cfg.failure_target_exponent);
  return out;
}

}  // namespace qbmm
